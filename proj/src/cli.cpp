#include "prodtri/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "prodtri/claims.hpp"
#include "prodtri/families.hpp"
#include "prodtri/io.hpp"
#include "prodtri/reference_data.hpp"
#include "prodtri/riordan.hpp"
#include "prodtri/sampling.hpp"

namespace prodtri {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse:
    case ErrorCode::invalid_argument:
    case ErrorCode::invalid_id:
    case ErrorCode::length_mismatch:
    case ErrorCode::insufficient_depth:
    case ErrorCode::normalization:
      return exit_usage;
    case ErrorCode::unavailable:
    case ErrorCode::offline_miss:
      return exit_unavailable;
    default:
      return exit_failure;
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Rational> to_rationals(const std::vector<BigInt>& v) { return {v.begin(), v.end()}; }

IntSequence powers(long r, std::size_t n) {
  IntSequence s;
  BigInt p = 1;
  for (std::size_t i = 0; i < n; ++i, p *= r) s.terms.push_back(p);
  return s;
}

IntSequence take(std::vector<BigInt> v, std::size_t n, std::size_t offset = 0) {
  if (v.size() > n) v.resize(n);
  return IntSequence{std::move(v), offset};
}

// Rows of a triangle until at least `terms` entries.
IntSequence flatten_rows(const std::function<LowerTriMatrix(std::size_t)>& build, std::size_t terms) {
  std::size_t rows = 1;
  while (rows * (rows + 1) / 2 < terms) ++rows;
  return take(build(rows).flatten(), terms);
}

IntSequence default_deleham_r(std::size_t n) {
  IntSequence s;
  s.terms.emplace_back(0);
  for (long k = 0; s.size() < n; ++k) {
    s.terms.emplace_back(k + 2);
    s.terms.emplace_back(k + 1);
  }
  return s;
}

IntSequence default_deleham_s(std::size_t n) {
  IntSequence s;
  for (std::size_t k = 0; k < n; ++k) s.terms.emplace_back(k % 2 == 0 ? 1 : 0);
  return s;
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::invalid_argument, "cannot read " + path);
  return read_all(f);
}

}  // namespace

CFSpec parse_cf_spec(std::string_view text) {
  std::string s = trim(text);
  bool finite = false;
  if (!s.empty() && s.back() == '!') {
    finite = true;
    s.pop_back();
  }
  if (s.size() < 2 || s[1] != ':' || (s[0] != 'S' && s[0] != 'J'))
    throw Error(ErrorCode::parse, "continued fraction spec must start with S: or J:");
  const std::string body = s.substr(2);
  if (s[0] == 'S') return StieltjesCF{to_rationals(parse_int_list(body)), finite};
  const auto semi = body.find(';');
  JacobiCF j;
  j.a = to_rationals(parse_int_list(body.substr(0, semi)));
  if (semi != std::string::npos) j.b = to_rationals(parse_int_list(body.substr(semi + 1)));
  j.finite = finite;
  return j;
}

IntSequence run_generator(std::string_view spec, std::size_t terms) {
  std::istringstream is{std::string(spec)};
  std::vector<std::string> words{std::istream_iterator<std::string>(is), {}};
  if (words.empty()) throw Error(ErrorCode::parse, "empty generator spec");
  const std::string name = words[0];
  std::map<std::string, std::string> opt;
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (words[i].rfind("--", 0) != 0 || i + 1 >= words.size())
      throw Error(ErrorCode::parse, "generator options are --key value pairs: " + std::string(spec));
    opt[words[i].substr(2)] = words[i + 1];
    ++i;
  }
  const auto num = [&](const std::string& key, long fallback) {
    auto it = opt.find(key);
    if (it == opt.end()) return fallback;
    try {
      std::size_t used = 0;
      const long v = std::stol(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
      return v;
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse, "--" + key + " expects an integer");
    }
  };
  const auto list = [&](const std::string& key) -> std::vector<BigInt> {
    auto it = opt.find(key);
    if (it == opt.end()) throw Error(ErrorCode::invalid_argument, name + " needs --" + key);
    return parse_int_list(it->second);
  };
  const long r = num("r", 1);

  if (name == "hanna-col") return hanna_first_column(r, terms);
  if (name == "hanna-a") return hanna_a_sequence(r, terms);
  if (name == "hanna-triangle") return flatten_rows([&](std::size_t n) { return hanna_triangle(r, n); }, terms);
  if (name == "appell-col") {
    IntSequence s;
    for (std::size_t n = 0; n < terms; ++n) s.terms.push_back(appell_m_closed_form(r, n));
    return s;
  }
  if (name == "appell-triangle")
    return flatten_rows([&](std::size_t n) { return almost_pm_triangle(powers(r, n), n); }, terms);
  if (name == "binomial-transform") {
    const std::string base = opt.count("base") ? opt["base"] : "shifted-factorials";
    IntSequence b;
    if (base == "shifted-factorials")
      b = shifted_factorials(terms);
    else
      b = take(parse_int_list(base), terms);
    return binomial_transform_r(b, r);
  }
  if (name == "martin-kearney") return martin_kearney(num("alpha", 1), num("beta", 0), num("gamma", 1), terms);
  if (name == "cf") {
    CFSpec cf;
    if (opt.count("s"))
      cf = StieltjesCF{to_rationals(list("s")), opt.count("finite") > 0};
    else
      cf = JacobiCF{to_rationals(list("ja")), opt.count("jb") ? to_rationals(list("jb")) : std::vector<Rational>{},
                    opt.count("finite") > 0};
    return series_to_sequence(cf_to_series(cf, terms));
  }
  if (name == "seq") return take(list("a"), terms);
  if (name == "hanna-poly")
    return flatten_rows([](std::size_t n) { return coefficient_array(hanna_m_polynomials(n)); }, terms);
  if (name == "appell-poly")
    return flatten_rows([](std::size_t n) { return coefficient_array(appell_m_polynomials(n)); }, terms);
  if (name == "deleham") {
    return flatten_rows(
        [&](std::size_t n) {
          const auto rw = opt.count("rw") ? IntSequence{list("rw"), 0} : default_deleham_r(n);
          const auto sw = opt.count("sw") ? IntSequence{list("sw"), 0} : default_deleham_s(n);
          return deleham_delta(rw, sw, n);
        },
        terms);
  }
  throw Error(ErrorCode::invalid_argument, "unknown generator " + name);
}

namespace {

struct Io {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
};

IntSequence sequence_source(const Io& io, const std::string& a, const std::string& a_file, const std::string& cf,
                            std::size_t needed) {
  if (!a.empty()) return IntSequence{parse_int_list(a == "-" ? read_all(io.in) : a), 0};
  if (!a_file.empty()) return IntSequence{parse_int_list(read_file(a_file)), 0};
  if (!cf.empty()) return series_to_sequence(cf_to_series(parse_cf_spec(cf), needed));
  throw Error(ErrorCode::invalid_argument, "custom triangles need --a, --a-file or --cf");
}

std::string render_series(const PowerSeries& s, Format format) {
  const bool integral = std::all_of(s.coeffs().begin(), s.coeffs().end(), [](const Rational& q) { return is_integer(q); });
  if (integral) return render(series_to_sequence(s), format);
  if (format == Format::json) return to_json(s).dump() + "\n";
  return join_decimal(s.coeffs(), format == Format::latex ? ", " : ",") + "\n";
}

struct TriangleArgs {
  std::string kind;
  long r = 1;
  std::size_t n = 7;
  std::string a, a_file, cf, rw, sw, format = "plain";
  bool production = false, delta = false, compare = false;
};

int cmd_triangle(const TriangleArgs& t, const Io& io) {
  const Format format = parse_format(t.format);
  if (t.n == 0) throw Error(ErrorCode::invalid_argument, "--n must be at least 1");
  if (t.r < 0 && (t.kind == "hanna" || t.kind == "appell"))
    throw Error(ErrorCode::invalid_argument, "--r must be nonnegative");
  if ((t.production || t.delta) && (t.kind == "hanna-poly" || t.kind == "appell-poly" || t.kind == "deleham"))
    throw Error(ErrorCode::invalid_argument, "--production and --delta apply to hanna, appell and custom");
  if (t.production && t.delta) throw Error(ErrorCode::invalid_argument, "choose one of --production and --delta");

  if (t.kind == "hanna-poly" || t.kind == "appell-poly") {
    const auto polys = t.kind == "hanna-poly" ? hanna_m_polynomials(t.n) : appell_m_polynomials(t.n);
    io.out << render(coefficient_array(polys), format);
    return exit_ok;
  }
  if (t.kind == "deleham") {
    const auto need = 2 * t.n + 2;
    const auto rw = t.rw.empty() ? default_deleham_r(need) : IntSequence{parse_int_list(t.rw), 0};
    const auto sw = t.sw.empty() ? default_deleham_s(need) : IntSequence{parse_int_list(t.sw), 0};
    const auto d = deleham_delta(rw, sw, t.n);
    if (!t.compare) {
      io.out << render(d, format);
      return exit_ok;
    }
    if (format == Format::json) {
      io.out << nlohmann::json{{"deleham", to_json(d)}, {"coefficients", to_json(coefficient_array(hanna_m_polynomials(t.n)))}}
                    .dump()
             << "\n";
    } else {
      io.out << "Delta triangle:\n" << render(d, format) << "\nfirst-column polynomial coefficients:\n"
             << render(coefficient_array(hanna_m_polynomials(t.n)), format);
    }
    return exit_ok;
  }

  const std::size_t rows = t.production || t.delta ? t.n + 1 : t.n;
  IntSequence a;
  if (t.kind == "hanna")
    a = hanna_a_sequence(t.r, rows);
  else if (t.kind == "appell")
    a = powers(t.r, rows);
  else if (t.kind == "custom")
    a = sequence_source(io, t.a, t.a_file, t.cf, rows);
  else
    throw Error(ErrorCode::invalid_argument, "unknown triangle kind " + t.kind);

  if (t.delta) {
    io.out << render(verify_almost(a, rows).observed_delta, format);
    return exit_ok;
  }
  const auto m = almost_pm_triangle(a, rows);
  io.out << render(t.production ? production_matrix(m) : m.square(), format);
  return exit_ok;
}

struct VerifyArgs {
  std::string target;
  std::string a = "random";
  std::size_t trials = 100, n = 12;
  long r = 1;
  std::uint64_t seed = 7;
  bool json = false, offline = false;
  std::string cache_dir;
};

OeisClient make_client(bool offline, bool refresh, const std::string& cache_dir, HttpGet http) {
  OeisOptions o;
  o.offline = offline;
  o.refresh = refresh;
  if (!cache_dir.empty()) o.cache_dir = cache_dir;
  return OeisClient(o, std::move(http));
}

int cmd_verify(const VerifyArgs& v, const Io& io, HttpGet http) {
  if (v.target == "claims") {
    const auto client = make_client(v.offline, false, v.cache_dir, std::move(http));
    const auto report = run_claims(client);
    io.out << (v.json ? to_json(report).dump(2) + "\n" : render_plain(report));
    return report.ok() ? exit_ok : exit_failure;
  }

  if (v.target == "proposition") {
    if (v.n < 3) throw Error(ErrorCode::invalid_argument, "--n must be at least 3");
    std::vector<IntSequence> inputs;
    if (v.a == "random") {
      Rng rng(v.seed);
      for (std::size_t t = 0; t < v.trials; ++t) inputs.push_back(random_sequence(rng, v.n, -9, 9));
    } else {
      inputs.push_back(IntSequence{parse_int_list(v.a == "-" ? read_all(io.in) : v.a), 0});
    }
    std::size_t held = 0;
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t t = 0; t < inputs.size(); ++t) {
      const auto rep = verify_almost(inputs[t], v.n);
      if (rep.holds) {
        ++held;
        continue;
      }
      nlohmann::json f{{"trial", t}, {"a", to_json(inputs[t])}};
      if (rep.first_mismatch) f["first_mismatch"] = {rep.first_mismatch->first, rep.first_mismatch->second};
      failures.push_back(f);
    }
    const bool ok = held == inputs.size();
    if (v.json) {
      io.out << nlohmann::json{{"target", "proposition"}, {"n", v.n}, {"trials", inputs.size()}, {"held", held},
                               {"ok", ok}, {"failures", failures}}
                    .dump(2)
             << "\n";
    } else {
      for (const auto& f : failures) io.out << "trial " << f["trial"] << ": P_M - M differs from the prediction\n";
      io.out << "proposition: " << held << "/" << inputs.size() << " hold (N = " << v.n << ")\n";
    }
    return ok ? exit_ok : exit_failure;
  }

  if (v.target == "hanna") {
    if (v.r < 0) throw Error(ErrorCode::invalid_argument, "--r must be nonnegative");
    if (v.n < 3) throw Error(ErrorCode::invalid_argument, "--n must be at least 3");
    std::vector<std::pair<std::string, bool>> checks;
    const auto h = hanna_triangle(v.r, v.n);
    if (v.r <= 4 && v.n <= 7) {
      checks.emplace_back("matches the published block", h == reference::hanna(v.r).leading_block(v.n));
    } else if (v.r <= 4) {
      checks.emplace_back("leading 7x7 matches the published block", h.leading_block(7) == reference::hanna(v.r));
    }
    checks.emplace_back("almost its own production matrix", verify_almost(hanna_a_sequence(v.r, v.n), v.n).holds);
    checks.emplace_back("self-building recurrence agrees", self_build_triangle(hanna_a_sequence(v.r, v.n), v.n) == h);
    checks.emplace_back("column 0 solves the convolution recurrence",
                        IntSequence{h.column(0), 0} == hanna_first_column(v.r, v.n));
    bool ok = true;
    nlohmann::json items = nlohmann::json::array();
    for (const auto& [name, pass] : checks) {
      ok = ok && pass;
      items.push_back({{"check", name}, {"pass", pass}});
    }
    if (v.json) {
      io.out << nlohmann::json{{"target", "hanna"}, {"r", v.r}, {"n", v.n}, {"ok", ok}, {"checks", items}}.dump(2) << "\n";
    } else {
      for (const auto& [name, pass] : checks) io.out << (pass ? "[pass] " : "[fail] ") << "H(" << v.r << "): " << name << "\n";
    }
    return ok ? exit_ok : exit_failure;
  }
  throw Error(ErrorCode::invalid_argument, "unknown verify target " + v.target);
}

struct CfArgs {
  std::string action, s, ja, jb, seq, kind = "jacobi", format = "plain";
  std::size_t terms = 10, depth = 3;
  bool finite = false;
};

CFSpec cf_from_args(const CfArgs& c) {
  if (!c.s.empty() && (!c.ja.empty() || !c.jb.empty()))
    throw Error(ErrorCode::invalid_argument, "give either --s or --ja/--jb");
  if (!c.s.empty()) return StieltjesCF{to_rationals(parse_int_list(c.s)), c.finite};
  if (!c.ja.empty()) return JacobiCF{to_rationals(parse_int_list(c.ja)), to_rationals(parse_int_list(c.jb)), c.finite};
  throw Error(ErrorCode::invalid_argument, "need --s or --ja");
}

int cmd_cf(const CfArgs& c, const Io& io) {
  const Format format = parse_format(c.format);
  if (c.action == "expand") {
    io.out << render_series(cf_to_series(cf_from_args(c), c.terms), format);
    return exit_ok;
  }
  if (c.action == "contract") {
    if (c.s.empty()) throw Error(ErrorCode::invalid_argument, "contract needs --s");
    io.out << render(CFSpec{stieltjes_to_jacobi(StieltjesCF{to_rationals(parse_int_list(c.s)), c.finite})}, format);
    return exit_ok;
  }
  if (c.action == "fit") {
    if (c.seq.empty()) throw Error(ErrorCode::invalid_argument, "fit needs --seq");
    const auto terms = parse_int_list(c.seq);
    const auto s = PowerSeries::from_integers(terms);
    if (c.kind == "jacobi") {
      io.out << render(CFSpec{series_to_jacobi(s, c.depth)}, format);
    } else if (c.kind == "stieltjes") {
      io.out << render(CFSpec{series_to_stieltjes(s, c.depth)}, format);
    } else {
      throw Error(ErrorCode::invalid_argument, "--kind is jacobi or stieltjes");
    }
    return exit_ok;
  }
  throw Error(ErrorCode::invalid_argument, "unknown cf action " + c.action);
}

struct OeisArgs {
  std::string id, against, cache_dir;
  std::size_t limit = 0, start = 0;
  bool offline = false, refresh = false, json = false;
};

int cmd_oeis(const OeisArgs& o, const Io& io, HttpGet http) {
  const OeisId id(o.id);
  const auto client = make_client(o.offline, o.refresh, o.cache_dir, std::move(http));
  const auto rec = client.fetch_sequence(id, o.limit);
  if (o.against.empty()) {
    if (o.json) {
      io.out << nlohmann::json{{"id", id.str()}, {"offset", rec.offset}, {"source", to_string(rec.source)},
                               {"terms", to_json(rec.terms)["terms"]}}
                    .dump()
             << "\n";
    } else {
      io.out << id.str() << " (offset " << rec.offset << ", " << to_string(rec.source) << "): "
             << join_decimal(rec.terms.terms) << "\n";
    }
    return exit_ok;
  }
  if (o.start > rec.terms.size()) throw Error(ErrorCode::invalid_argument, "--start is past the end of the record");
  const std::size_t available = rec.terms.size() - o.start;
  const std::size_t n = o.limit > 0 ? std::min(o.limit, available) : std::min<std::size_t>(available, 30);
  const auto computed = run_generator(o.against, n);
  const auto rep = compare_prefix(computed, rec, o.start);
  if (o.json) {
    nlohmann::json j{{"id", id.str()},         {"against", o.against},      {"match", rep.is_prefix},
                     {"common_prefix", rep.common_prefix}, {"record_start", rep.record_start},
                     {"source", to_string(rec.source)}};
    if (rep.first_mismatch) j["first_mismatch"] = *rep.first_mismatch;
    io.out << j.dump() << "\n";
  } else if (rep.is_prefix) {
    io.out << id.str() << ": match (" << rep.common_prefix << " terms from index " << o.start << ", "
           << to_string(rec.source) << ")\n";
  } else {
    io.out << id.str() << ": mismatch at term " << rep.first_mismatch.value_or(0) << " after " << rep.common_prefix
           << " matching";
    if (rep.first_mismatch && *rep.first_mismatch < computed.size() &&
        o.start + *rep.first_mismatch < rec.terms.size())
      io.out << " (computed " << to_decimal(computed[*rep.first_mismatch]) << ", record "
             << to_decimal(rec.terms[o.start + *rep.first_mismatch]) << ")";
    io.out << "\n";
  }
  return rep.is_prefix ? exit_ok : exit_failure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in,
            HttpGet http) {
  const Io io{out, err, in};
  CLI::App app{"Exact construction and verification of triangles that are almost their own production matrix",
               "prodtri"};
  app.require_subcommand(1);

  TriangleArgs t;
  auto* tri = app.add_subcommand("triangle", "Print a triangle");
  tri->add_option("kind", t.kind, "hanna | appell | custom | hanna-poly | appell-poly | deleham")
      ->required()
      ->check(CLI::IsMember({"hanna", "appell", "custom", "hanna-poly", "appell-poly", "deleham"}));
  tri->add_option("--r", t.r, "Family parameter (hanna, appell: a_n = r^n)");
  tri->add_option("--n", t.n, "Dimension")->capture_default_str();
  tri->add_option("--a", t.a, "Defining sequence a_0, a_1, ... ('-' reads stdin)");
  tri->add_option("--a-file", t.a_file, "File holding the defining sequence");
  tri->add_option("--cf", t.cf, "Defining sequence as a continued fraction, S:c1,c2,... or J:a0,a1,...;b1,...");
  tri->add_option("--rw", t.rw, "Delta: r weights");
  tri->add_option("--sw", t.sw, "Delta: s weights");
  tri->add_option("--format", t.format, "plain | json | csv | latex")->capture_default_str();
  tri->add_flag("--production", t.production, "Print the production matrix instead");
  tri->add_flag("--delta", t.delta, "Print P_M - M instead");
  tri->add_flag("--compare", t.compare, "Delta: also print the first-column polynomial coefficients");

  VerifyArgs v;
  auto* ver = app.add_subcommand("verify", "Run checks; exit 0 iff all pass");
  ver->add_option("target", v.target, "proposition | hanna | claims")
      ->required()
      ->check(CLI::IsMember({"proposition", "hanna", "claims"}));
  ver->add_option("--a", v.a, "'random' or an explicit sequence")->capture_default_str();
  ver->add_option("--trials", v.trials)->capture_default_str();
  ver->add_option("--n", v.n)->capture_default_str();
  ver->add_option("--r", v.r)->capture_default_str();
  ver->add_option("--seed", v.seed)->capture_default_str();
  ver->add_flag("--json", v.json);
  ver->add_flag("--offline", v.offline, "Never download OEIS data");
  ver->add_option("--cache-dir", v.cache_dir);

  CfArgs c;
  auto* cf = app.add_subcommand("cf", "Continued fractions");
  cf->add_option("action", c.action, "expand | fit | contract")
      ->required()
      ->check(CLI::IsMember({"expand", "fit", "contract"}));
  cf->add_option("--s", c.s, "S-fraction coefficients c1, c2, ...");
  cf->add_option("--ja", c.ja, "J-fraction a0, a1, ...");
  cf->add_option("--jb", c.jb, "J-fraction b1, b2, ...");
  cf->add_flag("--finite", c.finite, "The fraction stops here");
  cf->add_option("--terms", c.terms)->capture_default_str();
  cf->add_option("--seq", c.seq, "Sequence to fit");
  cf->add_option("--depth", c.depth)->capture_default_str();
  cf->add_option("--kind", c.kind, "jacobi | stieltjes")->capture_default_str();
  cf->add_option("--format", c.format)->capture_default_str();

  OeisArgs o;
  auto* oe = app.add_subcommand("oeis", "Fetch an OEIS b-file and compare a generated sequence");
  oe->add_option("id", o.id, "A-number")->required();
  oe->add_option("--against", o.against, "Generator, e.g. \"hanna-col --r 3\"");
  oe->add_option("--limit", o.limit, "Terms to read (0: all)");
  oe->add_option("--start", o.start, "Record index aligned with the first generated term");
  oe->add_flag("--offline", o.offline, "Use only the cache and vendored fixtures");
  oe->add_flag("--refresh", o.refresh, "Download even if cached");
  oe->add_option("--cache-dir", o.cache_dir);
  oe->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (tri->parsed()) return cmd_triangle(t, io);
    if (ver->parsed()) return cmd_verify(v, io, std::move(http));
    if (cf->parsed()) return cmd_cf(c, io);
    if (oe->parsed()) return cmd_oeis(o, io, std::move(http));
  } catch (const Error& e) {
    err << "prodtri: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "prodtri: internal error: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace prodtri
