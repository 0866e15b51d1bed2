#pragma once
// The prodtri command line.
//
//   prodtri triangle <hanna|appell|custom|hanna-poly|appell-poly|deleham> [options]
//   prodtri verify <proposition|hanna|claims> [options]
//   prodtri cf <expand|fit|contract> [options]
//   prodtri oeis <A-number> [--against "<generator>"] [options]
//
// Exit codes: 0 success, 1 failed check or internal error, 2 usage error,
// 3 OEIS data unavailable.

#include <iosfwd>
#include <string>
#include <vector>

#include "prodtri/contfrac.hpp"
#include "prodtri/oeis.hpp"

namespace prodtri {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_unavailable = 3 };

int exit_code_for(ErrorCode code);

// "S:1,2,2,3" or "J:3,5,7;2,6", optionally followed by "!" for a finite fraction.
CFSpec parse_cf_spec(std::string_view text);

// Sequence generators accepted by `oeis --against`, e.g. "hanna-col --r 3".
IntSequence run_generator(std::string_view spec, std::size_t terms);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in,
            HttpGet http = default_http_get());

}  // namespace prodtri
