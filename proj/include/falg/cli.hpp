#pragma once

// Command-line front end. Subcommands:
//
//   eval     --algebra A --expr E [--bind name=vec.json]...
//   apply    --map m.json --vector v.json          (tail regime if either has "tail")
//   compose  --outer f.json --inner g.json          (f o g)
//   tensor   --vector a.json --vector b.json ...    pure tensor
//   tensor   --algebra A --tensor t.json --map f.json --vector x.json
//   norm     --vector v.json | --map m.json         "[lo, hi]"
//   mul      --algebra A --vector a.json --vector b.json   certified product
//   check    --algebra A [--trials N] [--seed S] [--max-index M]
//   dual     --functional phi.json --vector v.json
//
// Shared flags: --backend {int,rat,f64} (default rat), --json.
// --algebra takes "builtin:<name>" or a JSON path. FALG_MAX_INDEX sets the
// default --max-index (16).
//
// Exit codes: 0 success, 1 check failure (law violated, pair bound exceeded,
// non-associative algebra where one is required), 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

namespace falg::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace falg::cli
