#include "relspan/cli/commands.hpp"

#include "relspan/error.hpp"
#include "relspan/finset/linearize.hpp"
#include "relspan/io/document.hpp"
#include "relspan/relcat/small_category.hpp"

#include <random>
#include <sstream>

namespace relspan::cli {

namespace {

using io::json;
using finset::FinFun;
using finset::FinSetCat;
using finset::FinSetObj;
using coalg::CoalgCat;
using coalg::CoalgMap;

struct Result {
  Report report;
  json data = json::object();
};

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::ParseError, what); }

const std::string& required(const std::string& value, const char* flag) {
  if (value.empty()) usage(std::string("missing ") + flag);
  return value;
}

json coalgebra_json(const coalg::Coalgebra& c) {
  return json{{"dim", c.dim()}, {"delta", io::matrix_to_json(c.delta())}, {"epsilon", io::matrix_to_json(c.epsilon())}};
}

json morphism_json(const FinFun& f) { return io::fun_to_json(f); }
json morphism_json(const CoalgMap& f) { return io::matrix_to_json(f.lin); }
json object_json(FinSetObj x) { return json{{"size", x.size}}; }
json object_json(const coalg::Coalgebra& c) { return coalgebra_json(c); }

mon::MonoidObj<CoalgCat> linearize_monoid(const mon::MonoidObj<FinSetCat>& m, alg::Field field) {
  return {finset::linearize_obj(m.carrier, field), finset::linearize_fun(m.m, field), finset::linearize_fun(m.u, field)};
}

class Session {
 public:
  explicit Session(const Options& opts)
      : opts_(opts),
        doc_(io::Document::load(required(opts.path, "input file"),
                                opts.field.empty() ? std::nullopt : std::optional(io::field_from_json(io::json(opts.field))))) {
    if (!opts.instance.empty() && opts.instance != "finset" && opts.instance != "coalg")
      usage("--instance must be finset or coalg");
  }

  Result dispatch() {
    const auto& c = opts_.command;
    if (c == "check") return check();
    if (c == "pullback") return pullback();
    if (c == "cotensor") return cotensor();
    if (c == "coherence") return coherence();
    if (c == "relcat") return relcat();
    if (c == "functor") return functor();
    if (c == "monoid") return monoid();
    usage("unknown command '" + c + "'");
  }

 private:
  alg::Field field() const { return doc_.field(); }

  // Explicit --instance, else coalg as soon as one named map is a coalgebra map.
  bool coalg_instance(const std::vector<std::string>& maps) const {
    if (!opts_.instance.empty()) return opts_.instance == "coalg";
    for (const auto& m : maps) {
      const auto k = doc_.kind(m);
      if (k == "coalg_map" || k == "bialgebra") return true;
    }
    return false;
  }

  FinFun fin_map(const std::string& name) const {
    if (doc_.kind(name) != "function") usage("\"" + name + "\" is not a function; use --instance coalg");
    return doc_.function(name);
  }

  CoalgMap coalg_map(const std::string& name) const {
    if (doc_.kind(name) == "function") return finset::linearize_fun(doc_.function(name), field());
    return doc_.coalg_map(name);
  }

  template <class B>
  B base() const {
    if constexpr (std::is_same_v<B, CoalgCat>)
      return CoalgCat(field());
    else
      return FinSetCat{};
  }

  template <class B>
  cat::Morphism<B> map_in(const std::string& name) const {
    if constexpr (std::is_same_v<B, CoalgCat>)
      return coalg_map(name);
    else
      return fin_map(name);
  }

  // check

  Result check() {
    Result res;
    std::vector<std::string> names;
    if (!opts_.name.empty())
      names.push_back(opts_.name);
    else
      names = doc_.names();
    for (const auto& n : names) {
      Report r;
      try {
        r = check_entity(n);
      } catch (const Error& e) {
        if (e.code() == Errc::ParseError || e.code() == Errc::UnknownKind) throw;
        r.fail(std::string(to_string(e.code())), e.what());
      }
      res.report.merge(r, n);
      res.data[n] = doc_.kind(n);
    }
    return res;
  }

  Report check_entity(const std::string& n) {
    const std::string k = doc_.kind(n);
    Report r;
    if (k == "set") {
      doc_.set(n);
      r.pass("set");
    } else if (k == "function") {
      doc_.function(n);
      r.pass("function");
    } else if (k == "coalgebra") {
      r = coalg::check_coalgebra(doc_.coalgebra(n));
    } else if (k == "coalg_map") {
      r = coalg::check_coalg_map(doc_.coalg_map(n));
    } else if (k == "bialgebra") {
      const auto b = doc_.bialgebra(n);
      r.merge(coalg::check_coalgebra(b.carrier), "coalgebra");
      if (r.ok()) r.merge(mon::check_monoid(CoalgCat(field()), b), "monoid");
    } else if (k == "finset_monoid") {
      r = mon::check_monoid(FinSetCat{}, doc_.finset_monoid(n));
    } else if (k == "small_category") {
      r = relcat_report<FinSetCat>(doc_.small_category(n), nullptr);
    } else if (k == "cospan") {
      const auto [f, g] = doc_.cospan(n);
      if (doc_.kind(f) == "monoid_morphism" || doc_.kind(g) == "monoid_morphism") {
        Result res;
        if (monoid_morphism_is_coalg(f) || monoid_morphism_is_coalg(g))
          monoid_pullback<CoalgCat>(res, f, g);
        else
          monoid_pullback<FinSetCat>(res, f, g);
        r = res.report;
      } else if (coalg_instance({f, g}))
        legs_report(r, CoalgCat(field()), coalg_map(f), coalg_map(g));
      else
        legs_report(r, FinSetCat{}, fin_map(f), fin_map(g));
    } else if (k == "chain") {
      const auto maps = doc_.chain(n);
      if (maps.size() != 2 && maps.size() != 6) usage(n + ": a chain has 2 or 6 maps");
      r = coalg_instance(maps) ? coherence_report<CoalgCat>(maps) : coherence_report<FinSetCat>(maps);
    } else if (k == "functor_map") {
      r = functor_report<FinSetCat>(n, nullptr);
    } else if (k == "monoid_morphism") {
      r = monoid_morphism_report(n);
    }
    return r;
  }

  template <class B>
  static bool legs_report(Report& r, const B& base, const cat::Morphism<B>& f, const cat::Morphism<B>& g) {
    auto w = cat::legs_violation(base, base.span_class(), cat::Cospan<B>{f, g});
    r.add("legs_in_class", !w, w.value_or(""));
    return !w;
  }

  // pullback

  Result pullback() {
    const auto [f, g] = doc_.cospan(required(opts_.cospan, "--cospan"));
    Result res;
    if (coalg_instance({f, g})) {
      pullback_report(res, CoalgCat(field()), coalg_map(f), coalg_map(g));
    } else {
      pullback_report(res, FinSetCat{}, fin_map(f), fin_map(g));
    }
    return res;
  }

  static json apex_json(const finset::FinPullback& pb) {
    const std::size_t nc = pb.cospan.right.dom().size;
    json pairs = json::array();
    for (std::size_t v : pb.pairing.table()) pairs.push_back({v / nc, v % nc});
    return pairs;
  }
  static json apex_json(const coalg::CoalgPullback& pb) { return coalgebra_json(pb.apex); }

  template <class B>
  void pullback_report(Result& res, const B& base, const cat::Morphism<B>& f, const cat::Morphism<B>& g) {
    Report& r = res.report;
    if (!legs_report(r, base, f, g)) return;
    const auto pb = relpull::relative_pullback(base, f, g);
    const auto lhs = base.compose(f, pb.p_left);
    const auto rhs = base.compose(g, pb.p_right);
    r.add("square", base.equal(lhs, rhs), base.equal(lhs, rhs) ? "" : base.difference(lhs, rhs));
    auto apex_w = base.span_class().violation(pb.span());
    r.add("apex_span_in_class", !apex_w, apex_w.value_or(""));
    r.add("joint_mono", relpull::jointly_monic(base, pb), "pairing of the projections is not injective");
    const auto one = base.identity(pb.apex);
    const auto filler = base.factor(pb, pb.p_left, pb.p_right);
    r.add("universal.projections", base.equal(filler, one), base.equal(filler, one) ? "" : base.difference(filler, one));
    if constexpr (std::is_same_v<B, FinSetCat>) {
      uniqueness_probes(r, pb);
    } else {
      const auto lifted = relpull::lift_through_pairing(base, pb, pb.p_left, pb.p_right);
      const bool ok = lifted && base.equal(*lifted, one);
      r.add("universal.pairing_lift", ok, ok ? "" : "projections do not lift through the pairing to the identity");
    }

    res.data["apex"] = apex_json(pb);
    res.data["apex_size"] = size_of(pb.apex);
    res.data["p_left"] = morphism_json(pb.p_left);
    res.data["p_right"] = morphism_json(pb.p_right);
    res.data["certificate"] = json{{"pairing", morphism_json(pb.pairing)}, {"injective", base.is_mono(pb.pairing)}};
    res.data["p_left_invertible"] = base.inverse(pb.p_left).has_value();
    res.data["p_right_invertible"] = base.inverse(pb.p_right).has_value();

    if (opts_.compare_cotensor) {
      const alg::Field fld = field();
      CoalgMap lf, lg;
      if constexpr (std::is_same_v<B, FinSetCat>) {
        lf = finset::linearize_fun(f, fld);
        lg = finset::linearize_fun(g, fld);
      } else {
        lf = f;
        lg = g;
      }
      const auto cpb = coalg::relative_pullback_coalg(lf, lg);
      const auto cot = coalg::cotensor(lf, lg);
      const auto cmp = coalg::compare_cotensor(cpb, cot);
      r.merge(cmp.report, "comparison");
      res.data["cotensor_dim"] = cot.inclusion.cols();
    }
  }

  static std::size_t size_of(FinSetObj x) { return x.size; }
  static std::size_t size_of(const coalg::Coalgebra& c) { return c.dim(); }

  // Random h: D -> apex must be the filler of (p_A h, p_C h).
  void uniqueness_probes(Report& r, const finset::FinPullback& pb) const {
    std::mt19937_64 rng(opts_.seed);
    const std::size_t n = pb.apex.size;
    for (int probe = 0; probe < 8; ++probe) {
      const std::size_t d = n == 0 ? 0 : 1 + rng() % 3;
      std::vector<std::size_t> table(d);
      for (auto& v : table) v = rng() % n;
      const FinFun h({d}, pb.apex, table);
      const FinSetCat base;
      const auto k = base.factor(pb, base.compose(pb.p_left, h), base.compose(pb.p_right, h));
      if (k != h) {
        r.fail("universal.uniqueness", "probe " + std::to_string(probe) + ": " + base.difference(k, h));
        return;
      }
    }
    r.pass("universal.uniqueness");
  }

  // cotensor

  Result cotensor() {
    const auto [fn, gn] = doc_.cospan(required(opts_.cospan, "--cospan"));
    const auto f = coalg_map(fn);
    const auto g = coalg_map(gn);
    Result res;
    const auto cot = coalg::cotensor(f, g);
    res.data["dim"] = cot.inclusion.cols();
    res.data["inclusion"] = io::matrix_to_json(cot.inclusion);
    res.data["subcoalgebra"] = cot.object.has_value();
    if (cot.object) {
      res.data["coalgebra"] = coalgebra_json(*cot.object);
      res.report.merge(coalg::check_coalgebra(*cot.object), "coalgebra");
    }
    const CoalgCat base(field());
    Report legs;
    if (legs_report(legs, base, f, g)) {
      const auto cmp = coalg::compare_cotensor(coalg::relative_pullback_coalg(f, g), cot);
      res.report.merge(cmp.report, "comparison");
    }
    res.data["legs_in_class"] = legs.ok();
    return res;
  }

  // coherence

  template <class B>
  Report coherence_report(const std::vector<std::string>& names) const {
    const B b = base<B>();
    std::vector<cat::Morphism<B>> m;
    for (const auto& n : names) m.push_back(map_in<B>(n));
    std::string shape = opts_.shape.empty() ? (m.size() == 2 ? "triangle" : "pentagon") : opts_.shape;
    Report r;
    if (shape == "triangle") {
      if (m.size() != 2) usage("the triangle needs a chain of 2 maps");
      r = relpull::coherence_triangle(b, m[0], m[1]);
      const auto one_b = b.identity(b.cod(m[0]));
      const auto left = relpull::unit_iso(b, relpull::relative_pullback(b, m[0], one_b), relpull::Side::left);
      r.add("unit_iso.left", relpull::is_two_sided_inverse(b, left), "p_A is not invertible");
      const auto right = relpull::unit_iso(b, relpull::relative_pullback(b, one_b, m[1]), relpull::Side::right);
      r.add("unit_iso.right", relpull::is_two_sided_inverse(b, right), "p_C is not invertible");
    } else if (shape == "pentagon") {
      if (m.size() != 6) usage("the pentagon needs a chain of 6 maps");
      r = relpull::coherence_pentagon(b, m[0], m[1], m[2], m[3], m[4], m[5]);
    } else {
      usage("--shape must be triangle or pentagon");
    }
    return r;
  }

  Result coherence() {
    const auto maps = doc_.chain(required(opts_.chain, "--chain"));
    if (maps.size() != 2 && maps.size() != 6) usage("a chain has 2 or 6 maps");
    Result res;
    const bool lin = coalg_instance(maps);
    res.report = lin ? coherence_report<CoalgCat>(maps) : coherence_report<FinSetCat>(maps);
    res.data["instance"] = lin ? "coalg" : "finset";
    return res;
  }

  // relcat

  template <class B>
  Report relcat_report(const relcat::SmallCategory& sc, json* data) const {
    Report r;
    const auto v = relcat::category_violation(sc);
    r.add("category_table", !v, v.value_or(""));
    const auto fin = v ? relcat::relative_category_from_tables(sc) : relcat::from_small_category(sc);
    if (!v) {
      const bool round = relcat::composition_table(fin) == sc.comp;
      r.add("composition_table.round_trip", round, "d does not reproduce the composition table");
    }
    if constexpr (std::is_same_v<B, CoalgCat>) {
      const auto lin = relcat::linearize_relcat(fin, field());
      r.merge(relcat::check_relative_category(CoalgCat(field()), lin));
      if (data) (*data)["apex_dim"] = lin.span.apex.dim();
    } else {
      r.merge(relcat::check_relative_category(FinSetCat{}, fin));
      if (data) {
        (*data)["objects"] = fin.span.base.size;
        (*data)["arrows"] = fin.span.apex.size;
        (*data)["composable_pairs"] = fin.pb.apex.size;
      }
    }
    return r;
  }

  Result relcat() {
    const auto sc = doc_.small_category(required(opts_.category, "--category"));
    Result res;
    const bool lin = opts_.instance == "coalg";
    res.report = lin ? relcat_report<CoalgCat>(sc, &res.data) : relcat_report<FinSetCat>(sc, &res.data);
    return res;
  }

  // functor

  template <class B>
  Report functor_report(const std::string& map_name, json* data) const {
    const auto fm = doc_.functor_map(map_name);
    const std::string& src_name = !opts_.src.empty() && data ? opts_.src : fm.src;
    const std::string& tgt_name = !opts_.tgt.empty() && data ? opts_.tgt : fm.tgt;
    const auto src = doc_.small_category(required(src_name, "--src"));
    const auto tgt = doc_.small_category(required(tgt_name, "--tgt"));
    Report r;
    const auto vs = relcat::category_violation(src);
    r.add("src.category", !vs, vs.value_or(""));
    const auto vt = relcat::category_violation(tgt);
    r.add("tgt.category", !vt, vt.value_or(""));
    if (!r.ok()) return r;
    const auto s = relcat::from_small_category(src);
    const auto t = relcat::from_small_category(tgt);
    const FinFun b({src.objects}, {tgt.objects}, fm.objects);
    const FinFun a({src.arrows}, {tgt.arrows}, fm.arrows);
    if constexpr (std::is_same_v<B, CoalgCat>) {
      const alg::Field fld = field();
      const relcat::RelativeFunctor<CoalgCat> fn{finset::linearize_fun(b, fld), finset::linearize_fun(a, fld)};
      r.merge(relcat::check_relative_functor(CoalgCat(fld), fn, relcat::linearize_relcat(s, fld),
                                             relcat::linearize_relcat(t, fld)));
    } else {
      r.merge(relcat::check_relative_functor(FinSetCat{}, relcat::RelativeFunctor<FinSetCat>{b, a}, s, t));
    }
    return r;
  }

  Result functor() {
    Result res;
    const bool lin = opts_.instance == "coalg";
    const auto& m = required(opts_.map, "--map");
    res.report = lin ? functor_report<CoalgCat>(m, &res.data) : functor_report<FinSetCat>(m, &res.data);
    return res;
  }

  // monoid

  bool is_bialgebra(const std::string& name) const { return doc_.kind(name) == "bialgebra"; }

  template <class B>
  mon::MonoidObj<B> monoid_in(const std::string& name) const {
    if constexpr (std::is_same_v<B, CoalgCat>) {
      if (is_bialgebra(name)) return doc_.bialgebra(name);
      return linearize_monoid(doc_.finset_monoid(name), field());
    } else {
      return doc_.finset_monoid(name);
    }
  }

  template <class B>
  mon::MonoidMorphism<B> monoid_morphism_in(const std::string& name) const {
    const auto ref = doc_.monoid_morphism(name);
    return {monoid_in<B>(ref.src), monoid_in<B>(ref.tgt), map_in<B>(ref.map)};
  }

  bool monoid_morphism_is_coalg(const std::string& name) const {
    if (!opts_.instance.empty()) return opts_.instance == "coalg";
    const auto ref = doc_.monoid_morphism(name);
    return is_bialgebra(ref.src) || is_bialgebra(ref.tgt) || doc_.kind(ref.map) == "coalg_map";
  }

  Report monoid_morphism_report(const std::string& name) const {
    if (monoid_morphism_is_coalg(name))
      return mon::check_monoid_morphism(CoalgCat(field()), monoid_morphism_in<CoalgCat>(name));
    return mon::check_monoid_morphism(FinSetCat{}, monoid_morphism_in<FinSetCat>(name));
  }

  template <class B>
  void monoid_pullback(Result& res, const std::string& fn, const std::string& gn) const {
    const B b = base<B>();
    const auto f = monoid_morphism_in<B>(fn);
    const auto g = monoid_morphism_in<B>(gn);
    Report& r = res.report;
    if (!legs_report(r, b, f.f, g.f)) return;
    const auto pb = relpull::relative_pullback(b, f.f, g.f);
    const auto mo = relpull::monoid_on_pullback(b, f, g, pb);
    if constexpr (std::is_same_v<B, CoalgCat>) r.merge(coalg::check_coalgebra(mo.carrier), "apex.coalgebra");
    r.merge(mon::check_monoid(b, mo), "apex.monoid");
    r.merge(mon::check_monoid_morphism(b, mon::MonoidMorphism<B>{mo, f.src, pb.p_left}), "p_left");
    r.merge(mon::check_monoid_morphism(b, mon::MonoidMorphism<B>{mo, g.src, pb.p_right}), "p_right");
    res.data["apex"] = object_json(mo.carrier);
    res.data["m"] = morphism_json(mo.m);
    res.data["u"] = morphism_json(mo.u);
  }

  Result monoid() {
    Result res;
    if (!opts_.cospan.empty()) {
      const auto [f, g] = doc_.cospan(opts_.cospan);
      if (monoid_morphism_is_coalg(f) || monoid_morphism_is_coalg(g))
        monoid_pullback<CoalgCat>(res, f, g);
      else
        monoid_pullback<FinSetCat>(res, f, g);
      return res;
    }
    const auto& n = required(opts_.name, "--name or --cospan");
    const auto k = doc_.kind(n);
    if (k == "monoid_morphism") {
      res.report = monoid_morphism_report(n);
    } else if (k == "bialgebra" || (k == "finset_monoid" && opts_.instance == "coalg")) {
      const auto mo = monoid_in<CoalgCat>(n);
      res.report.merge(coalg::check_coalgebra(mo.carrier), "coalgebra");
      res.report.merge(mon::check_monoid(CoalgCat(field()), mo), "monoid");
    } else if (k == "finset_monoid") {
      res.report = mon::check_monoid(FinSetCat{}, doc_.finset_monoid(n));
    } else {
      usage("\"" + n + "\" is a " + k + ", not a monoid or monoid morphism");
    }
    return res;
  }

  const Options& opts_;
  io::Document doc_;
};

std::string render_text(const Options& opts, const Result& res) {
  std::ostringstream out;
  out << "command: " << opts.command << "\n";
  for (const auto& c : res.report.checks()) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed && !c.witness.empty()) out << ": " << c.witness;
    out << "\n";
  }
  for (const auto& [k, v] : res.data.items()) out << k << ": " << v.dump() << "\n";
  out << "status: " << (res.report.ok() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string render_json(const Options& opts, const Result& res) {
  json checks = json::array();
  for (const auto& c : res.report.checks()) {
    json e{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.passed) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  json doc{{"command", opts.command},
           {"checks", std::move(checks)},
           {"result", res.data},
           {"status", res.report.ok() ? "pass" : "fail"},
           {"exit_code", res.report.ok() ? 0 : 1}};
  return doc.dump(2) + "\n";
}

}  // namespace

Outcome run(const Options& opts) {
  Result res;
  try {
    Session session(opts);
    res = session.dispatch();
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError || e.code() == Errc::UnknownKind) return {2, {}, std::string(e.what()) + "\n"};
    res.report.fail(std::string(to_string(e.code())), e.what());
  } catch (const json::exception& e) {
    return {2, {}, std::string("ParseError: ") + e.what() + "\n"};
  }
  if (res.report.checks().empty()) res.report.pass("nothing_to_check");
  Outcome o;
  o.exit_code = res.report.ok() ? 0 : 1;
  o.out = opts.json ? render_json(opts, res) : render_text(opts, res);
  return o;
}

}  // namespace relspan::cli
