#include "cyop/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyop/arithmetic.hpp"
#include "cyop/catalog.hpp"
#include "cyop/hadamard.hpp"
#include "cyop/opfile.hpp"
#include "cyop/transforms.hpp"
#include "cyop/wronskian.hpp"

namespace cyop {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "cyop 1.0";
constexpr const char* kZeta4 = "1.082323233711138191516003696541167902774750951918726907682976";

std::string head_str(const PowerSeries& s, int terms) { return s.truncated(terms).str("z", terms + 1); }

std::vector<Int> small_divisors(const Int& n, size_t cap = 4096) {
  std::vector<Int> out;
  Int m = abs(n);
  for (Int d = 1; d * d <= m && out.size() < cap; ++d)
    if (m % d == 0) {
      out.push_back(d);
      out.push_back(m / d);
    }
  return out;
}

// Rational roots with multiplicity (the local exponents when applied to the
// indicial polynomial).
std::vector<Rational> rational_roots(Poly p) {
  std::vector<Rational> roots;
  while (!p.is_zero() && p.degree() >= 1 && is_zero(p[0])) {
    roots.emplace_back(0);
    std::vector<Rational> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = Poly(std::move(c));
  }
  if (p.degree() < 1) return roots;
  p = p.scaled(Rational(p.denominator_lcm()));
  for (const Int& q : small_divisors(Int(p.leading().get_num())))
    for (const Int& num : small_divisors(Int(p[0].get_num())))
      for (int sign : {1, -1}) {
        Rational cand(sign * num, q);
        cand.canonicalize();
        while (p.degree() >= 1 && is_zero(p(cand))) {
          roots.push_back(cand);
          Poly quo, rem;
          Poly::divmod(p, Poly::linear(1, -cand), quo, rem);
          p = quo;
        }
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Input resolution: an existing path, a shipped data file, or a built-in id.
OpDocument resolve_input(const std::string& spec) {
  namespace fs = std::filesystem;
  if (fs::exists(spec)) return load_opfile(spec);
  for (const char* ext : {".op", ".seq"}) {
    fs::path p = fs::path(data_dir()) / (spec + ext);
    if (fs::exists(p)) return load_opfile(p.string());
  }
  // Fall back to the built-in catalog.
  const CatalogCase& c = catalog_case(spec);
  OpDocument doc;
  doc.name = c.id;
  if (c.op) {
    doc.form = "theta";
    doc.op = c.op;
  } else if (c.rec) {
    doc.form = "recurrence";
    doc.rec = c.rec;
  } else {
    doc.form = "sequence";
    doc.seq = catalog_sequence(c.id, 60);
  }
  for (const auto& t : c.tags) doc.meta["tags"] = doc.meta["tags"].empty() ? t : doc.meta["tags"] + "," + t;
  if (std::find(c.tags.begin(), c.tags.end(), "indexed-from-1") != c.tags.end()) doc.meta["offset"] = "1";
  return doc;
}

std::vector<Rational> sequence_from_0(const OpDocument& doc, int want) {
  if (doc.seq) {
    if (doc.meta.count("offset") && doc.meta.at("offset") == "1") {
      std::vector<Rational> v;
      v.emplace_back(0);  // placeholder A_0, never consulted by the checks
      v.insert(v.end(), doc.seq->values.begin(), doc.seq->values.end());
      return v;
    }
    return doc.seq->values;
  }
  if (doc.op) return recurrence_from_operator(*doc.op).unroll({Rational(1)}, want).values;
  if (doc.rec) return doc.rec->unroll({Rational(1)}, want).values;
  throw ParseError("document holds no data");
}

void print_lambert(std::ostream& out, const LambertSeries& l, const std::string& label, int max_l, json& rep) {
  out << label << " (weight " << l.weight << "), N0 = " << to_string(l.n0) << ":\n";
  json arr = json::array();
  for (int i = 0; i < std::min<int>(max_l, l.n.size()); ++i) {
    out << "  N_" << (i + 1) << " = " << to_string(l.n[i]) << (is_integer(l.n[i]) ? "" : "   [non-integer]") << "\n";
    arr.push_back(to_string(l.n[i]));
  }
  int bad = l.first_noninteger_index();
  out << "  integrality: "
      << (bad == 0 ? "all integral to l = " + std::to_string(l.n.size()) : "first non-integer at l = " + std::to_string(bad));
  auto support = l.denominator_prime_support();
  if (!support.empty()) {
    out << "; denominator prime support {";
    for (size_t i = 0; i < support.size(); ++i) out << (i ? ", " : "") << to_string(support[i]);
    out << "}";
  }
  out << "\n";
  rep["lambert"] = arr;
  rep["lambert_integral_upto"] = bad == 0 ? static_cast<int>(l.n.size()) : bad - 1;
}

int cmd_analyze(const std::string& input, int order, const std::string& n0_policy, long n0_bound, int weight,
                const std::string& rescale_c, int rescale_m, bool as_json, std::ostream& out) {
  OpDocument doc = resolve_input(input);
  std::optional<ThetaOperator> op = doc.op;
  if (!op && doc.rec) op = operator_from_recurrence(*doc.rec);
  if (!op) throw ParseError("analyze needs an operator (or recurrence) document");
  ThetaOperator c = op->canonical();
  int s = c.order();
  if (s < 2 || s > 6) throw ParseError("analyze: operator order must be between 2 and 6");

  json rep;
  rep["version"] = kVersion;
  rep["name"] = doc.name;
  rep["order"] = s;
  rep["zdeg"] = c.zdeg();
  std::ostringstream text;
  text << kVersion << " analyze: " << doc.name << "\n";
  text << "order " << s << ", z-degree " << c.zdeg() << "\n";

  Poly ind = indicial_polynomial(c);
  bool mum = is_mum(c);
  rep["mum"] = mum;
  rep["indicial"] = ind.str("L");
  text << "indicial polynomial: " << ind.str("L") << "\n";
  auto exponents = rational_roots(ind);
  text << "exponents:";
  json exps = json::array();
  for (const auto& e : exponents) {
    text << " " << to_string(e);
    exps.push_back(to_string(e));
  }
  if (static_cast<int>(exponents.size()) < ind.degree()) text << " (plus irrational ones)";
  text << "\n";
  rep["exponents"] = exps;
  text << "MUM: " << (mum ? "yes (all exponents zero)" : "no") << "\n";
  if (!mum) {
    text << "not MUM: indicial report only\n";
    out << (as_json ? rep.dump(2) + "\n" : text.str());
    return 0;
  }

  if (s == 4) {
    bool c22 = condition22(c).holds;
    rep["condition22"] = c22;
    text << "condition22: " << (c22 ? "holds" : "fails") << "\n";
  }

  auto basis = frobenius_basis(c, order);
  const PowerSeries& y0 = basis[0].analytic();
  text << "y0 = " << head_str(y0, 6) << "\n";
  rep["y0"] = json::array();
  for (int n = 0; n <= std::min(order, 10); ++n) rep["y0"].push_back(to_string(y0[n]));

  auto y0_sqrt = ps_nth_root(y0, 2);
  text << "y0^(1/2) integral: " << (y0_sqrt.integral ? "yes" : "no") << " (to order " << order << ")\n";
  rep["y0_sqrt_integral"] = y0_sqrt.integral;

  MirrorData mirror = mirror_map(basis, order);
  text << "q(z)/z = " << head_str(mirror.q_over_z, 5) << "\n";
  text << "z(q)/q = " << head_str(mirror.z_over_q, 5) << "\n";
  rep["q_over_z_integral"] = all_integral(mirror.q_over_z);
  rep["z_over_q_integral"] = all_integral(mirror.z_over_q);
  auto qz_cbrt = ps_nth_root(mirror.q_over_z, 3);
  text << "(q/z)^(1/3) integral: " << (qz_cbrt.integral ? "yes" : "no") << "; head " << head_str(qz_cbrt.root, 4)
       << "\n";
  rep["q_over_z_cbrt_integral"] = qz_cbrt.integral;

  if (s >= 3) {
    int w = (weight != 0) ? weight : (s <= 4 ? 3 : 2);
    PowerSeries base = coupling_in_z(basis);
    PowerSeries kq = ps_compose(base.truncated(order), mirror.z_over_q.truncated(order).shifted_up(1));
    Rational n0(1);
    if (n0_policy == "auto") {
      auto chosen = auto_n0(lambert_decompose(kq, w), Int(n0_bound));
      if (chosen) n0 = Rational(*chosen);
      text << "N0 (auto): " << to_string(n0) << "\n";
      rep["n0"] = to_string(n0);
    } else if (!n0_policy.empty()) {
      n0 = parse_rational(n0_policy);
    }
    kq = kq.scaled(n0);
    if (!rescale_c.empty()) {
      kq = rescale_coupling(kq, parse_rational(rescale_c), rescale_m);
      text << "coupling rescaled: c = " << rescale_c << ", m = " << rescale_m << "\n";
    }
    text << (s <= 4 ? "K(q) = " : "pseudo-coupling K~(q) = ") << head_str(kq, 5) << "\n";
    print_lambert(text, lambert_decompose(kq, w), s <= 4 ? "instanton numbers" : "weight-2 numbers", 15, rep);
  }
  out << (as_json ? rep.dump(2) + "\n" : text.str());
  return 0;
}

int cmd_hadamard(const std::string& a_spec, const std::string& b_spec, bool square, const std::string& mode,
                 const std::string& out_path, std::ostream& out) {
  OpDocument da = resolve_input(a_spec);
  if (!da.op) throw ParseError("hadamard needs operator documents");
  ThetaOperator result;
  std::string name;
  if (square) {
    if (mode == "meurman") {
      result = operator_from_recurrence(meurman_square(recurrence_from_operator(*da.op)));
    } else {
      // theta^2 - Az(2T+1) - Bz^2(T+1)^2 closed-square shape.
      ThetaOperator c = da.op->canonical();
      if (c.order() != 2 || c.zdeg() != 2) throw ShapeMismatch("closed square needs a z-degree-2 order-2 operator");
      Rational k = c.coeff(0)[2];
      Poly q1 = c.coeff(1);
      Poly quo, rem;
      Poly::divmod(q1, Poly::linear(2, 1), quo, rem);
      if (!rem.is_zero() || quo.degree() > 0) throw ShapeMismatch("z term is not A(2 theta + 1)");
      Rational A = -quo[0] / k;
      Poly::divmod(c.coeff(2), Poly::linear(1, 1).pow(2), quo, rem);
      if (!rem.is_zero() || quo.degree() > 0) throw ShapeMismatch("z^2 term is not B(theta+1)^2");
      Rational B = -quo[0] / k;
      result = had_square_closed(A, B);
    }
    name = da.name + "-square";
  } else {
    OpDocument db = resolve_input(b_spec);
    if (!db.op) throw ParseError("hadamard needs operator documents");
    if (mode == "meurman")
      result = operator_from_recurrence(
          meurman_product(recurrence_from_operator(*da.op), recurrence_from_operator(*db.op)));
    else if (da.op->canonical().order() == 3)
      result = had_closed_2x3(*da.op, *db.op);
    else
      result = had_closed_2x2(*da.op, *db.op);
    name = da.name + "*" + db.name;
  }

  // 40-term annihilation report against the pointwise product of the y0's.
  Sequence sa = recurrence_from_operator(*da.op).unroll({Rational(1)}, 44);
  std::vector<Rational> prod(sa.values);
  if (!square) {
    OpDocument db = resolve_input(b_spec);
    Sequence sb = recurrence_from_operator(*db.op).unroll({Rational(1)}, 44);
    for (size_t i = 0; i < prod.size(); ++i) prod[i] *= sb.values[i];
  } else {
    for (auto& v : prod) v *= v;
  }
  int start = (mode == "meurman") ? result.zdeg() : 0;
  bool ok = recurrence_from_operator(result).annihilates(prod, 40, start);

  std::string doc = serialize_operator(name, result, {{"source", kVersion}, {"mode", mode}});
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    f << doc;
  } else {
    out << doc;
  }
  out << "annihilation of the product sequence (terms " << start << "..40): " << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_transform(const std::string& input, const std::string& kind, const std::string& c_str,
                  const std::string& p_str, int r, const std::string& compare, const std::string& out_path,
                  std::ostream& out) {
  OpDocument doc = resolve_input(input);
  auto emit = [&](const std::string& name, const ThetaOperator& op) {
    std::string text = serialize_operator(name, op, {{"source", kVersion}, {"transform", kind}});
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << text;
    } else {
      out << text;
    }
  };

  if (kind == "exterior-square") {
    if (!doc.op) throw ParseError("transform needs an operator document");
    emit(doc.name + "-ext2", exterior_square(*doc.op));
    return 0;
  }
  if (kind == "dualize") {
    if (!doc.op) throw ParseError("transform needs an operator document");
    ThetaOperator dual = dualize(*doc.op, parse_rational(c_str));
    emit(doc.name + "-dual", dual);
    if (!compare.empty()) {
      OpDocument ref = resolve_input(compare);
      auto diffs = compare_operators(dual, ref.op.value());
      if (!diffs.empty()) {
        out << "MISMATCH against " << ref.name << " at " << diffs.size() << " coefficient(s):\n";
        for (auto [i, j] : diffs)
          out << "  z^" << i << " theta^" << j << ": computed " << to_string(dual.canonical().coeff(i)[j])
              << ", reference " << to_string(ref.op->canonical().coeff(i)[j]) << "\n";
        return 1;
      }
      out << "matches " << ref.name << " exactly\n";
    }
    return 0;
  }
  if (kind == "sym-sqrt") {
    if (!doc.op) throw ParseError("transform needs an operator document");
    emit(doc.name + "-sqrt", symmetric_square_root(*doc.op));
    return 0;
  }
  if (kind == "lift") {
    if (!doc.op) throw ParseError("transform needs an operator document");
    emit(doc.name + "-lift", central_binomial_lift(*doc.op));
    return 0;
  }
  if (kind == "prop7") {
    if (!doc.op) throw ParseError("transform needs an operator document");
    emit(doc.name + "-prop7", prop7_transform_op(*doc.op, parse_rational(p_str)));
    return 0;
  }
  if (kind == "prop8") {
    std::vector<Rational> a = sequence_from_0(doc, 90);
    Sequence s;
    s.name = doc.name;
    s.values = a;
    Sequence moved = prop8_transform(s, parse_rational(p_str), r);
    std::string text = serialize_sequence(moved, {{"source", kVersion}, {"transform", "prop8"}});
    if (!out_path.empty()) {
      std::ofstream f(out_path);
      f << text;
    } else {
      out << text;
    }
    auto fit = fit_operator(moved.values, 4, 12);
    if (fit) {
      out << "fitted order-4 annihilator (z-degree " << fit->zdeg() << "):\n";
      out << serialize_operator(doc.name + "-prop8-op", *fit);
    } else {
      out << "no order-4 annihilator found within z-degree 12\n";
      return 1;
    }
    return 0;
  }
  throw ParseError("unknown transform kind: " + kind);
}

int cmd_check(const std::string& input, const std::string& kind, int k, long p, int r, long n, int order, int power,
              const std::string& b_spec, const std::string& target, std::ostream& out) {
  OpDocument doc = resolve_input(input);
  std::vector<Rational> from0 = sequence_from_0(doc, std::max<long>(n, 64));
  std::vector<Rational> from1(from0.begin() + 1, from0.end());

  if (kind == "realizable") {
    RealizabilityReport rep = realizability(from1, k);
    out << "B:";
    for (size_t i = 0; i < std::min<size_t>(rep.b.size(), 12); ++i) out << " " << to_string(rep.b[i]);
    out << "\n";
    if (rep.all_integral()) {
      out << "k-realizable (integers verified to n = " << rep.b.size() << ")"
          << (rep.all_nonnegative ? ", all nonnegative" : ", negative entries present") << "\n";
      return 0;
    }
    out << "not " << k << "-realizable: first non-integer B at n = " << rep.first_noninteger << "\n";
    return 1;
  }
  if (kind == "supercongruence") {
    auto res = supercongruence(from0, p, r, k, n);
    if (res.holds) {
      out << "A(n p^" << r << ") == A(n p^" << (r - 1) << ") mod " << p << "^" << r * k << " verified for n <= " << n
          << "\n";
      return 0;
    }
    out << "FAIL at n = " << res.counterexample_n << "\n";
    return 1;
  }
  if (kind == "polylog") {
    PowerSeries res = polylog_identity_check(from1, k, order);
    if (res.is_zero()) {
      out << "polylog identity holds to order " << order << "\n";
      return 0;
    }
    out << "polylog identity FAILS: residual " << res.str("z", 4) << "\n";
    return 1;
  }
  if (kind == "lcm-bound") {
    bool ok = denominator_bound_check(from0, power);
    out << "D_n^" << power << " B_n integral: " << (ok ? "yes" : "no") << "\n";
    return ok ? 0 : 1;
  }
  if (kind == "zeta-limit") {
    OpDocument bdoc = resolve_input(b_spec);
    Sequence a;
    a.values = from0;
    Sequence b;
    b.values = sequence_from_0(bdoc, n);
    ZetaGap gap = zeta_limit_check(a, b, target.empty() ? kZeta4 : target, static_cast<int>(n));
    out << "B_" << n << "/A_" << n << " = " << decimal_string(gap.ratio, 24) << "\n";
    out << "gap = " << decimal_string(gap.gap, 24) << " (exact " << to_string(gap.gap) << ")\n";
    return 0;
  }
  throw ParseError("unknown check kind: " + kind);
}

int cmd_catalog_list(const std::string& dump_dir, std::ostream& out) {
  if (!dump_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(dump_dir);
    int count = 0;
    for (const auto& c : catalog()) {
      std::map<std::string, std::string> meta{{"label", c.label}, {"description", c.description}};
      if (!c.tags.empty()) {
        std::string t;
        for (const auto& tag : c.tags) t += (t.empty() ? "" : ",") + tag;
        meta["tags"] = t;
      }
      if (c.op) {
        std::ofstream f(fs::path(dump_dir) / (c.id + ".op"));
        f << serialize_operator(c.id, *c.op, meta);
        ++count;
      } else if (c.rec) {
        std::ofstream f(fs::path(dump_dir) / (c.id + ".op"));
        f << serialize_recurrence(c.id, *c.rec, meta);
        ++count;
      }
      if (c.term) {
        if (std::find(c.tags.begin(), c.tags.end(), "indexed-from-1") != c.tags.end()) meta["offset"] = "1";
        int upto = c.id.rfind("guillera", 0) == 0 ? 24 : 40;
        Sequence s = catalog_sequence(c.id, upto);
        std::ofstream f(fs::path(dump_dir) / (c.id + ".seq"));
        f << serialize_sequence(s, meta);
        ++count;
      }
    }
    // One dz-form exemplar exercising that grammar: the order-4 pullback with
    // its rational-function coefficients.
    {
      DzOperator dz = theta_to_dz(catalog_case("zeta4-op4").op.value());
      std::ofstream f(fs::path(dump_dir) / "zeta4-op4-dz.op");
      f << serialize_dz("zeta4-op4-dz", dz, {{"label", "(4.1) pullback"}, {"description", "d/dz form of zeta4-op4"}});
      ++count;
    }
    out << "wrote " << count << " files to " << dump_dir << "\n";
    return 0;
  }
  for (const auto& c : catalog()) {
    out << c.id;
    for (size_t i = c.id.size(); i < 24; ++i) out << ' ';
    out << (c.op ? "op " : c.rec ? "rec" : "seq") << "  " << c.label;
    for (size_t i = c.label.size(); i < 18; ++i) out << ' ';
    out << c.description;
    if (!c.tags.empty()) {
      out << "  [";
      for (size_t i = 0; i < c.tags.size(); ++i) out << (i ? "," : "") << c.tags[i];
      out << "]";
    }
    out << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for Calabi-Yau type differential operators"};
  app.require_subcommand(1);

  // analyze
  std::string in_analyze, n0 = "1", rescale_c;
  long n0_bound = 1000000;
  int order = 30, weight = 0, rescale_m = 1;
  bool as_json = false;
  auto* analyze = app.add_subcommand("analyze", "Frobenius basis, mirror map, couplings, integrality flags");
  analyze->add_option("input", in_analyze)->required();
  analyze->add_option("--order", order);
  analyze->add_option("--n0", n0);
  analyze->add_option("--n0-bound", n0_bound);
  analyze->add_option("--weight", weight);
  analyze->add_option("--rescale-c", rescale_c);
  analyze->add_option("--rescale-m", rescale_m);
  analyze->add_flag("--json", as_json);

  // hadamard
  std::string had_a, had_b, had_mode = "closed", had_out;
  bool had_square = false;
  auto* had = app.add_subcommand("hadamard", "Hadamard products of operators");
  had->add_option("a", had_a)->required();
  had->add_option("b", had_b);
  had->add_flag("--square", had_square);
  had->add_option("--mode", had_mode)->check(CLI::IsMember({"closed", "meurman"}));
  had->add_option("-o,--out", had_out);

  // transform
  std::string tr_in, tr_kind, tr_c = "1", tr_p = "1", tr_cmp, tr_out;
  int tr_r = 2;
  auto* tr = app.add_subcommand("transform", "exterior-square | dualize | prop7 | prop8 | sym-sqrt | lift");
  tr->add_option("input", tr_in)->required();
  tr->add_option("kind", tr_kind)->required();
  tr->add_option("--c", tr_c);
  tr->add_option("--p", tr_p);
  tr->add_option("--r", tr_r);
  tr->add_option("--compare", tr_cmp);
  tr->add_option("-o,--out", tr_out);

  // check
  std::string ck_in, ck_kind, ck_b, ck_target;
  int ck_k = 1, ck_r = 1, ck_order = 20, ck_power = 1;
  long ck_p = 2, ck_n = 20;
  auto* ck = app.add_subcommand("check", "realizable | supercongruence | polylog | lcm-bound | zeta-limit");
  ck->add_option("input", ck_in)->required();
  ck->add_option("kind", ck_kind)->required();
  ck->add_option("--k", ck_k);
  ck->add_option("--p", ck_p);
  ck->add_option("--r", ck_r);
  ck->add_option("--n", ck_n);
  ck->add_option("--order", ck_order);
  ck->add_option("--power", ck_power);
  ck->add_option("--b", ck_b);
  ck->add_option("--target", ck_target);

  // catalog-list
  std::string dump_dir;
  auto* cl = app.add_subcommand("catalog-list", "list or dump the shipped case library");
  cl->add_option("--dump", dump_dir);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "input error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(analyze))
      return cmd_analyze(in_analyze, order, n0, n0_bound, weight, rescale_c, rescale_m, as_json, out);
    if (app.got_subcommand(had)) return cmd_hadamard(had_a, had_b, had_square, had_mode, had_out, out);
    if (app.got_subcommand(tr)) return cmd_transform(tr_in, tr_kind, tr_c, tr_p, tr_r, tr_cmp, tr_out, out);
    if (app.got_subcommand(ck))
      return cmd_check(ck_in, ck_kind, ck_k, ck_p, ck_r, ck_n, ck_order, ck_power, ck_b, ck_target, out);
    if (app.got_subcommand(cl)) return cmd_catalog_list(dump_dir, out);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownCase& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ShapeMismatch& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CyopError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace cyop
