#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "charpreg/determinantal.hpp"
#include "charpreg/errors.hpp"
#include "charpreg/field.hpp"
#include "charpreg/hypersurface.hpp"
#include "charpreg/parse.hpp"
#include "charpreg/resolution.hpp"
#include "charpreg/scan.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace charpreg;

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               t0)
      .count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const Ideal& pick_ideal(const ParsedFile& pf, const std::string& name,
                        const std::string& path) {
  const Ideal* I = pf.find(name);
  if (!I) throw UsageError("no ideal named '" + name + "' in " + path);
  return *I;
}

std::string ring_line(const RingPtr& R) {
  std::string s = "p=" + std::to_string(R->p()) + " vars=";
  for (int i = 0; i < R->arity(); ++i) {
    if (i) s += ",";
    s += R->var_name(i);
  }
  s += " order=" + R->order().name();
  return s;
}

json ring_json(const RingPtr& R) {
  json vars = json::array();
  for (int i = 0; i < R->arity(); ++i) vars.push_back(R->var_name(i));
  return json{{"p", R->p()}, {"vars", vars}, {"order", R->order().name()}};
}

void emit_json(const std::string& command, const RingPtr& R, json result,
               Clock::time_point t0) {
  json doc{{"command", command},
           {"ring", ring_json(R)},
           {"result", std::move(result)},
           {"timing_ms", ms_since(t0)}};
  std::cout << doc.dump(2) << "\n";
}

json basis_json(const std::vector<Polynomial>& basis) {
  json arr = json::array();
  for (const auto& g : basis) arr.push_back(g.str());
  return arr;
}

void print_basis(const std::vector<Polynomial>& basis) {
  for (std::size_t k = 0; k < basis.size(); ++k)
    std::cout << "  [" << k + 1 << "] " << basis[k].str() << "\n";
}

// Twists are stored as generator degrees d (a copy of R(-d)); display uses
// the R(-d) convention, so signs flip at this boundary.
json betti_json(const BettiTable& b) {
  json arr = json::array();
  for (std::size_t i = 0; i < b.twists.size(); ++i) {
    json tw = json::array();
    for (int d : b.twists[i]) tw.push_back(-d);
    arr.push_back(json{{"homological_degree", i}, {"twists", std::move(tw)}});
  }
  return arr;
}

void print_betti(const BettiTable& b) {
  for (std::size_t i = 0; i < b.twists.size(); ++i) {
    std::cout << "F_" << i << ": rank " << b.twists[i].size() << ", twists [";
    for (std::size_t k = 0; k < b.twists[i].size(); ++k) {
      if (k) std::cout << ", ";
      std::cout << -b.twists[i][k];
    }
    std::cout << "]\n";
  }
}

// Compact one-line form of the leading modules: rank(twist) groups joined
// with ", "; a plain rank when the twist is zero.
std::string betti_head(const BettiTable& b, std::size_t count) {
  std::string s;
  for (std::size_t i = 0; i < b.twists.size() && i < count; ++i) {
    if (i) s += ", ";
    const auto& tw = b.twists[i];
    std::string part;
    for (std::size_t k = 0; k < tw.size();) {
      std::size_t j = k;
      while (j < tw.size() && tw[j] == tw[k]) ++j;
      if (!part.empty()) part += "+";
      part += std::to_string(j - k);
      if (tw[k] != 0) part += "(" + std::to_string(-tw[k]) + ")";
      k = j;
    }
    s += part;
  }
  return s;
}

struct FileArgs {
  std::string file;
  std::string ideal;
  bool as_json = false;
};

void add_file_args(CLI::App* cmd, FileArgs& a) {
  cmd->add_option("-f,--file", a.file, "ideal file")->required();
  cmd->add_option("-i,--ideal", a.ideal, "ideal name within the file")
      ->required();
  cmd->add_flag("--json", a.as_json, "machine-readable output");
}

void run_gb(const FileArgs& a) {
  auto t0 = Clock::now();
  ParsedFile pf = parse_ideal_file(read_file(a.file));
  const Ideal& I = pick_ideal(pf, a.ideal, a.file);
  const auto& basis = I.reduced_basis();
  if (a.as_json) {
    emit_json("gb", pf.ring,
              json{{"ideal", a.ideal}, {"basis", basis_json(basis)}}, t0);
    return;
  }
  std::cout << "ring: " << ring_line(pf.ring) << "\n";
  std::cout << "reduced Groebner basis of " << a.ideal << " (" << basis.size()
            << " elements):\n";
  print_basis(basis);
}

void run_member(const FileArgs& a, const std::string& expr) {
  auto t0 = Clock::now();
  ParsedFile pf = parse_ideal_file(read_file(a.file));
  const Ideal& I = pick_ideal(pf, a.ideal, a.file);
  Polynomial f = parse_polynomial(pf.ring, expr);
  bool inside = I.contains(f);
  if (a.as_json) {
    emit_json("member", pf.ring,
              json{{"ideal", a.ideal},
                   {"element", f.str()},
                   {"member", inside}},
              t0);
    return;
  }
  std::cout << f.str() << " in " << a.ideal << ": " << (inside ? "yes" : "no")
            << "\n";
}

void run_colon(const FileArgs& a, const std::string& expr,
               const std::string& by) {
  auto t0 = Clock::now();
  if (expr.empty() == by.empty())
    throw UsageError("colon needs exactly one of --element or --by");
  ParsedFile pf = parse_ideal_file(read_file(a.file));
  const Ideal& I = pick_ideal(pf, a.ideal, a.file);
  Ideal C = Ideal::zero(pf.ring);
  std::string rhs;
  if (!expr.empty()) {
    Polynomial f = parse_polynomial(pf.ring, expr);
    rhs = f.str();
    C = I.colon(f);
  } else {
    rhs = by;
    C = I.colon(pick_ideal(pf, by, a.file));
  }
  const auto& basis = C.reduced_basis();
  if (a.as_json) {
    emit_json("colon", pf.ring,
              json{{"ideal", a.ideal},
                   {"by", rhs},
                   {"basis", basis_json(basis)}},
              t0);
    return;
  }
  std::cout << "ring: " << ring_line(pf.ring) << "\n";
  std::cout << "(" << a.ideal << " : " << rhs << ") reduced basis ("
            << basis.size() << " elements):\n";
  print_basis(basis);
}

void run_frobpow(const FileArgs& a, unsigned e) {
  auto t0 = Clock::now();
  ParsedFile pf = parse_ideal_file(read_file(a.file));
  const Ideal& I = pick_ideal(pf, a.ideal, a.file);
  unsigned long long q = prime_power_checked(pf.ring->p(), e);
  Ideal Iq = I.bracket_power(e);
  if (a.as_json) {
    emit_json("frobpow", pf.ring,
              json{{"ideal", a.ideal},
                   {"e", e},
                   {"q", q},
                   {"generators", basis_json(Iq.generators())}},
              t0);
    return;
  }
  std::cout << "ring: " << ring_line(pf.ring) << "\n";
  std::cout << a.ideal << "^[" << q << "] generators:\n";
  print_basis(Iq.generators());
}

void run_res(const FileArgs& a, int max_length) {
  auto t0 = Clock::now();
  ParsedFile pf = parse_ideal_file(read_file(a.file));
  const Ideal& I = pick_ideal(pf, a.ideal, a.file);
  ResolutionOptions opts;
  if (max_length > 0) opts.max_length = max_length;
  Resolution r = free_resolution(I, opts);
  BettiTable b = betti(r);
  if (a.as_json) {
    emit_json("res", pf.ring,
              json{{"ideal", a.ideal},
                   {"betti", betti_json(b)},
                   {"complete", b.complete}},
              t0);
    return;
  }
  std::cout << "ring: " << ring_line(pf.ring) << "\n";
  std::cout << "minimal free resolution of R/" << a.ideal << ":\n";
  print_betti(b);
  std::cout << "length " << b.length() << ", "
            << (b.complete ? "complete" : "truncated") << "\n";
}

void run_reg(const FileArgs& a) {
  auto t0 = Clock::now();
  ParsedFile pf = parse_ideal_file(read_file(a.file));
  const Ideal& I = pick_ideal(pf, a.ideal, a.file);
  int v = regularity_of_quotient(I);
  if (a.as_json) {
    emit_json("reg", pf.ring, json{{"ideal", a.ideal}, {"regularity", v}}, t0);
    return;
  }
  std::cout << "reg(R/" << a.ideal << ") = " << v << "\n";
}

void run_scan_cmd(const FileArgs& a, int max_e, bool csv) {
  auto t0 = Clock::now();
  if (a.as_json && csv) throw UsageError("choose one of --json or --csv");
  ParsedFile pf = parse_ideal_file(read_file(a.file));
  const Ideal& I = pick_ideal(pf, a.ideal, a.file);
  unsigned e_top = max_e >= 0 ? static_cast<unsigned>(max_e)
                              : (pf.ring->p() == 2 ? 2u : 1u);
  ScanReport rep = charpreg::run_scan(I, e_top, GBOptions{});

  if (csv) {
    std::cout << "e,q,i,reg_i,colon_max_deg,reg_ratio,deg_ratio\n";
    for (const auto& row : rep.rows) {
      const auto& crow = rep.colon_rows.at(row.e);
      std::cout << row.e << "," << row.q << "," << row.gen_index << ","
                << row.reg << "," << crow.max_gen_degree << "," << row.ratio
                << "," << crow.deg_ratio << "\n";
    }
    return;
  }

  if (a.as_json) {
    json rows = json::array();
    for (const auto& row : rep.rows)
      rows.push_back(json{{"e", row.e},
                          {"q", row.q},
                          {"i", row.gen_index},
                          {"reg", row.reg},
                          {"ratio", row.ratio}});
    json crows = json::array();
    for (const auto& c : rep.colon_rows)
      crows.push_back(json{{"e", c.e},
                           {"q", c.q},
                           {"max_gen_degree", c.max_gen_degree},
                           {"regularity", c.colon_regularity},
                           {"deg_ratio", c.deg_ratio},
                           {"degree_bounded", c.degree_bounded},
                           {"certified", c.certified}});
    json result{{"ideal", a.ideal},
                {"rows", std::move(rows)},
                {"colon_rows", std::move(crows)},
                {"singular_dims", rep.singular_dims},
                {"dimension_convention", "Krull dimension of the affine cone"},
                {"homogenized", rep.homogenized},
                {"max_reg_ratio", rep.max_reg_ratio},
                {"max_deg_ratio", rep.max_deg_ratio},
                {"verdict", rep.verdict}};
    if (rep.homogenized)
      result["homogenizing_variable"] = rep.homogenizing_variable;
    emit_json("scan", pf.ring, std::move(result), t0);
    return;
  }

  std::cout << "ring: " << ring_line(pf.ring) << "\n";
  std::cout << "scan of " << a.ideal << ", e <= " << e_top << "\n";
  if (rep.homogenized)
    std::cout << "input homogenized via new variable "
              << rep.homogenizing_variable << "\n";
  std::cout << "singular locus dims per generator"
            << " (Krull dimension of the affine cone): [";
  for (std::size_t k = 0; k < rep.singular_dims.size(); ++k) {
    if (k) std::cout << ", ";
    std::cout << rep.singular_dims[k];
  }
  std::cout << "]\n";
  std::cout << std::setw(3) << "e" << std::setw(6) << "q" << std::setw(4)
            << "i" << std::setw(7) << "reg_i" << std::setw(10) << "reg_i/q"
            << "\n";
  for (const auto& row : rep.rows)
    std::cout << std::setw(3) << row.e << std::setw(6) << row.q << std::setw(4)
              << row.gen_index << std::setw(7) << row.reg << std::setw(10)
              << row.ratio << "\n";
  std::cout << "colon rows (bracket power : ideal):\n";
  std::cout << std::setw(3) << "e" << std::setw(6) << "q" << std::setw(9)
            << "max_deg" << std::setw(5) << "reg" << std::setw(10) << "deg/q"
            << std::setw(9) << "bounded" << std::setw(11) << "certified"
            << "\n";
  for (const auto& c : rep.colon_rows)
    std::cout << std::setw(3) << c.e << std::setw(6) << c.q << std::setw(9)
              << c.max_gen_degree << std::setw(5) << c.colon_regularity
              << std::setw(10) << c.deg_ratio << std::setw(9)
              << (c.degree_bounded ? "yes" : "no") << std::setw(11)
              << (c.certified ? "yes" : "no") << "\n";
  std::cout << "verdict: " << rep.verdict << "\n";
}

void run_demo(std::uint32_t p, unsigned e, int steps, bool as_json) {
  auto t0 = Clock::now();
  if (!is_prime(p)) throw UsageError("--p must be a machine prime");
  DeterminantalSetup D = determinantal_setup(p);
  unsigned long long q = prime_power_checked(p, e);
  HypersurfaceContext S(D.ring, D.g1);
  std::vector<FreeVector> pres{FreeVector::wrap(D.g2.frobenius(e)),
                               FreeVector::wrap(D.g3.frobenius(e))};
  PeriodicResolution pr = resolve_over_hypersurface(
      S, FreeModule::free_of_rank(1), std::move(pres), steps);
  BettiTable b = betti(pr.res);

  if (as_json) {
    json period;
    if (pr.period.start)
      period = json{{"detected", true},
                    {"start", *pr.period.start},
                    {"twist_shift", pr.period.shift}};
    else
      period = json{{"detected", false}};
    emit_json("demo-determinantal", D.ring,
              json{{"p", p},
                   {"e", e},
                   {"q", q},
                   {"hypersurface", D.g1.str()},
                   {"betti", betti_json(b)},
                   {"period", std::move(period)},
                   {"complete", b.complete}},
              t0);
    return;
  }
  std::cout << "ring: " << ring_line(D.ring) << "\n";
  std::cout << "S = R/(" << D.g1.str() << "), resolving S/(g2^" << q
            << ", g3^" << q << ")S over S, " << steps << " steps\n";
  std::cout << "betti head: " << betti_head(b, 5) << "\n";
  print_betti(b);
  if (pr.period.start)
    std::cout << "period=2 from homological degree " << *pr.period.start
              << ", twist shift " << pr.period.shift << "\n";
  else
    std::cout << "no period detected within the computed steps\n";
}

void run_verify(std::uint32_t p, unsigned e, bool as_json) {
  auto t0 = Clock::now();
  if (!is_prime(p)) throw UsageError("--p must be a machine prime");
  DeterminantalSetup D = determinantal_setup(p);
  IdentityReport rep = verify_determinantal_identities(D, e);

  if (as_json) {
    json fams = json::array();
    for (const auto& [name, ok] : rep.families)
      fams.push_back(json{{"name", name}, {"pass", ok}});
    emit_json("verify-identities", D.ring,
              json{{"p", p},
                   {"e", e},
                   {"q", rep.q},
                   {"families", std::move(fams)},
                   {"all_pass", rep.all_pass()}},
              t0);
  } else {
    std::cout << "ring: " << ring_line(D.ring) << "\n";
    for (const auto& [name, ok] : rep.families)
      std::cout << "  " << name << ": " << (ok ? "pass" : "FAIL") << "\n";
    if (rep.all_pass())
      std::cout << "all " << rep.families.size() << " identity families pass"
                << " (q=" << rep.q << ")\n";
  }
  if (!rep.all_pass())
    throw InvariantViolation("determinantal identity suite failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded commutative-algebra engine over prime fields"};
  app.require_subcommand(1);

  FileArgs gb_args;
  add_file_args(app.add_subcommand("gb", "reduced Groebner basis"), gb_args);

  FileArgs member_args;
  std::string member_expr;
  auto* member = app.add_subcommand("member", "ideal membership");
  add_file_args(member, member_args);
  member->add_option("-g,--element", member_expr, "polynomial expression")
      ->required();

  FileArgs colon_args;
  std::string colon_expr, colon_by;
  auto* colon = app.add_subcommand("colon", "colon ideal");
  add_file_args(colon, colon_args);
  colon->add_option("-g,--element", colon_expr, "divide by this polynomial");
  colon->add_option("-j,--by", colon_by, "divide by this named ideal");

  FileArgs frob_args;
  unsigned frob_e = 1;
  auto* frob = app.add_subcommand("frobpow", "Frobenius bracket power");
  add_file_args(frob, frob_args);
  frob->add_option("-e,--e", frob_e, "Frobenius exponent, q = p^e");

  FileArgs res_args;
  int res_max_length = -1;
  auto* res = app.add_subcommand("res", "minimal graded free resolution");
  add_file_args(res, res_args);
  res->add_option("--max-length", res_max_length, "length guard override");

  FileArgs reg_args;
  add_file_args(app.add_subcommand("reg", "Castelnuovo-Mumford regularity"),
                reg_args);

  FileArgs scan_args;
  int scan_max_e = -1;
  bool scan_csv = false;
  auto* scan = app.add_subcommand("scan", "linear regularity-growth scan");
  add_file_args(scan, scan_args);
  scan->add_option("--max-e", scan_max_e,
                   "scan e = 0..max-e (default 2 at p=2, else 1)");
  scan->add_flag("--csv", scan_csv, "CSV rows");

  std::uint32_t demo_p = 2;
  unsigned demo_e = 1;
  int demo_steps = 6;
  bool demo_json = false;
  auto* demo = app.add_subcommand(
      "demo-determinantal", "periodic hypersurface resolution showcase");
  demo->add_option("--p", demo_p, "prime");
  demo->add_option("--e", demo_e, "Frobenius exponent");
  demo->add_option("--steps", demo_steps, "resolution steps");
  demo->add_flag("--json", demo_json, "machine-readable output");

  std::uint32_t ver_p = 2;
  unsigned ver_e = 1;
  bool ver_json = false;
  auto* ver = app.add_subcommand("verify-identities",
                                 "closed-form identity families");
  ver->add_option("--p", ver_p, "prime");
  ver->add_option("--e", ver_e, "Frobenius exponent");
  ver->add_flag("--json", ver_json, "machine-readable output");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand("gb")) run_gb(gb_args);
    if (app.got_subcommand("member")) run_member(member_args, member_expr);
    if (app.got_subcommand("colon"))
      run_colon(colon_args, colon_expr, colon_by);
    if (app.got_subcommand("frobpow")) run_frobpow(frob_args, frob_e);
    if (app.got_subcommand("res")) run_res(res_args, res_max_length);
    if (app.got_subcommand("scan"))
      run_scan_cmd(scan_args, scan_max_e, scan_csv);
    if (app.got_subcommand("reg")) run_reg(reg_args);
    if (app.got_subcommand("demo-determinantal"))
      run_demo(demo_p, demo_e, demo_steps, demo_json);
    if (app.got_subcommand("verify-identities"))
      run_verify(ver_p, ver_e, ver_json);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const GuardAbort& e) {
    std::cerr << "degree guard: " << e.what() << "\n";
    return 3;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
