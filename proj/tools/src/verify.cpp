#include <fstream>
#include <functional>

#include "commands.hpp"
#include "golden_data.hpp"
#include "report.hpp"

namespace csg::cli {

namespace {

using Row = std::function<json()>;

std::vector<Point> cone3d_generators() {
  return {Point{2, 0, 0}, Point{4, 2, 4}, Point{0, 1, 0}, Point{3, 0, 0}, Point{6, 3, 6}, Point{3, 1, 1},
          Point{4, 1, 1}, Point{3, 1, 2}, Point{1, 1, 0}, Point{3, 2, 3}, Point{1, 2, 1}};
}

PointSet cone2d_gaps() {
  return {Point{1, 1}, Point{1, 2}, Point{2, 1}, Point{2, 2}, Point{2, 3}, Point{3, 1}, Point{3, 2}, Point{3, 3}};
}

RationalCone cone2d() { return RationalCone::from_rays({Point{1, 2}, Point{3, 1}}); }

std::vector<Point> apery_empty_generators() {
  return {Point{3, 0}, Point{0, 4}, Point{1, 6}, Point{2, 6}, Point{2, 8}, Point{2, 9}, Point{3, 6},
          Point{3, 7}, Point{4, 3}, Point{4, 4}, Point{4, 5}, Point{5, 3}, Point{6, 5}};
}

PointSet almost_symmetric_gaps() {
  PointSet g;
  const std::vector<std::pair<Coord, std::vector<Coord>>> cols{
      {0, {1, 2, 4, 5, 7, 8}}, {1, {0, 1, 2, 3, 4, 5, 6, 7, 8}}, {2, {0, 1, 2, 3, 4, 5, 6, 7, 8}},
      {3, {1, 2, 4, 5, 7, 8}}, {4, {0, 1, 2, 3, 4}},              {5, {2, 5, 8}},
      {8, {2, 5, 8}}};
  for (const auto& [x, ys] : cols)
    for (Coord y : ys) g.insert(Point{x, y});
  return g;
}

json reduced_values(const InvariantReport& r) {
  json out = json::array();
  for (const auto& [ray, v] : r.reduced_type) out.push_back(v);
  return out;
}

bool strict_subset(const PointSet& a, const PointSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Semigroup antichain_k(Coord k) {
  PointSet a;
  for (Coord i = 0; i < k; ++i) a.insert(Point{i, k - 1 - i});
  return antichain_semigroup(RationalCone::orthant(2), a);
}

std::vector<std::pair<std::string, Row>> rows() {
  std::vector<std::pair<std::string, Row>> r;
  auto cone3d = [] { return Semigroup::from_generators(cone3d_generators()); };
  r.emplace_back("cone3d-gaps", [=] { return points_json(cone3d().gaps()); });
  r.emplace_back("cone3d-fa", [=] { return points_json(frobenius_allowable(cone3d())); });
  r.emplace_back("cone3d-maximals", [=] { return points_json(maximal_gaps_cone(cone3d())); });
  r.emplace_back("cone3d-sg", [=] { return points_json(special_gaps(cone3d())); });
  r.emplace_back("cone3d-pf", [=] { return points_json(pseudo_frobenius(cone3d())); });

  auto c2 = [] { return Semigroup::from_gaps(cone2d(), cone2d_gaps()); };
  r.emplace_back("cone2d-fa", [=] { return points_json(frobenius_allowable(c2())); });
  r.emplace_back("cone2d-maximals", [=] { return points_json(maximal_gaps_cone(c2())); });
  r.emplace_back("cone2d-sg", [=] { return points_json(special_gaps(c2())); });
  r.emplace_back("cone2d-pf", [=] { return points_json(pseudo_frobenius(c2())); });
  r.emplace_back("cone2d-adjoined-chain", [] {
    PointSet gaps = cone2d_gaps();
    gaps.erase(Point{2, 1});
    const Semigroup t = Semigroup::from_gaps(cone2d(), gaps);
    const auto fa = frobenius_allowable(t), mx = maximal_gaps_cone(t), sg = special_gaps(t);
    return json{{"sg_equals_pf", sg == pseudo_frobenius(t)},
                {"fa_strictly_in_maximals", strict_subset(fa, mx)},
                {"maximals_strictly_in_sg", strict_subset(mx, sg)}};
  });

  auto small = [] { return Semigroup::from_generators({Point{0, 4}, Point{2, 0}, Point{1, 1}, Point{1, 2}}); };
  r.emplace_back("apery-small-set", [=] { return points_json(small().apery_wrt_E().elements); });
  r.emplace_back("apery-small-conductor-shift", [=] { return small().in_conductor(Point{3, 2}); });
  r.emplace_back("apery-small-conductor-point", [=] {
    const Semigroup s = small();
    const AperySet ap = s.apery_wrt_E();
    const Point x{3, 4};
    return json{{"in_conductor", s.in_conductor(x)},
                {"in_apery", ap.elements.count(x) == 1},
                {"maximal", ap.maximal_elements.count(x) == 1},
                {"below_4_5", s.order().leq(x, Point{4, 5})}};
  });

  auto empty = [] { return Semigroup::from_generators(apery_empty_generators()); };
  r.emplace_back("apery-empty-set", [=] { return points_json(empty().apery_wrt_E().elements); });
  r.emplace_back("apery-empty-conductor", [=] { return points_json(empty().conductor_minimal_elements()); });
  r.emplace_back("apery-empty-reduced-type", [=] { return reduced_type_wrt_E(empty()); });

  auto as = [] { return Semigroup::from_gaps(RationalCone::orthant(2), almost_symmetric_gaps()); };
  r.emplace_back("almost-symmetric-pf", [=] { return points_json(pseudo_frobenius(as())); });
  r.emplace_back("almost-symmetric-rays", [=] { return points_json(as().extremal_rays()); });
  r.emplace_back("almost-symmetric-flags", [=] {
    const InvariantReport rep = classify(as());
    return json{{"almost_symmetric", rep.flags.almost_symmetric},
                {"symmetric", rep.flags.symmetric},
                {"minimal_reduced_type", rep.flags.minimal_reduced_type}};
  });
  r.emplace_back("almost-symmetric-reduced-type", [=] { return reduced_values(classify(as())); });

  auto four = [] {
    return Semigroup::from_gaps(RationalCone::orthant(2), {Point{0, 1}, Point{1, 0}, Point{1, 1}, Point{2, 1}});
  };
  r.emplace_back("four-gap-pf", [=] { return points_json(pseudo_frobenius(four())); });
  r.emplace_back("four-gap-rays", [=] { return points_json(four().extremal_rays()); });
  r.emplace_back("four-gap-reduced-type", [=] { return reduced_values(classify(four())); });
  r.emplace_back("four-gap-flags", [=] {
    const InvariantReport rep = classify(four());
    return json{{"maximal_reduced_type", rep.flags.maximal_reduced_type},
                {"almost_symmetric", rep.flags.almost_symmetric}};
  });

  r.emplace_back("bresinsky-h2-pf", [] { return bresinsky(2).semigroup.pseudo_frobenius(); });
  r.emplace_back("bresinsky-h2-frobenius", [] { return bresinsky(2).semigroup.frobenius(); });
  r.emplace_back("bresinsky-reduced-type", [] {
    json out = json::array();
    for (Coord h = 2; h <= 6; ++h) out.push_back(bresinsky(h).reduced_type);
    return out;
  });
  r.emplace_back("bresinsky-type", [] {
    json out = json::array();
    for (Coord h = 2; h <= 6; ++h) out.push_back(bresinsky(h).semigroup.type());
    return out;
  });

  auto tg = [] { return t_graded(NumericalSemigroup({5, 6, 7}), 2); };
  r.emplace_back("tgraded-567-pf", [=] { return points_json(pseudo_frobenius(tg())); });
  r.emplace_back("tgraded-567-fa", [=] { return points_json(frobenius_allowable(tg())); });
  r.emplace_back("tgraded-567-conductor", [=] {
    const Semigroup s = tg();
    bool ok = true;
    for (Coord x = 0; x <= 15; ++x)
      for (Coord y = 0; y <= 15; ++y) ok = ok && s.in_conductor(Point{x, y}) == (x + y >= 10);
    return ok;
  });

  auto th = [] { return thicken(NumericalSemigroup({5, 7, 8}).model(), 4, 2); };
  r.emplace_back("thicken-578-gaps", [=] { return points_json(th().gaps()); });
  r.emplace_back("thicken-578-pf", [=] { return points_json(pseudo_frobenius(th())); });
  r.emplace_back("thicken-578-5-gap-count", [=] { return thicken(th(), 5, 3).gaps().size(); });
  r.emplace_back("thicken-578-5-pf", [=] { return points_json(pseudo_frobenius(thicken(th(), 5, 3))); });

  for (auto [a, rr, d] : std::vector<std::tuple<Coord, Coord, std::size_t>>{
           {4, 1, 2}, {6, 1, 2}, {8, 1, 2}, {6, 1, 3}, {7, 2, 2}}) {
    const std::string id =
        "sfamily-" + std::to_string(a) + "-" + std::to_string(rr) + "-" + std::to_string(d);
    r.emplace_back(id, [a = a, rr = rr, d = d] {
      const SFamilyResult res = s_family(a, rr, d);
      const auto pf = pseudo_frobenius(res.semigroup);
      const auto fa = frobenius_allowable(res.semigroup);
      bool in_both = true;
      for (const auto& w : res.witnesses) in_both = in_both && pf.count(w) && fa.count(w);
      return json{{"embedding_dimension", res.semigroup.min_generators().size()},
                  {"witnesses_in_pf_and_fa", in_both},
                  {"type_bound_holds", pf.size() >= res.type_lower_bound}};
    });
  }

  r.emplace_back("two-special-gaps-decomposition", [] {
    const Semigroup s =
        Semigroup::from_gaps(RationalCone::orthant(2), {Point{0, 1}, Point{1, 0}, Point{1, 2}, Point{2, 1}});
    const DecompositionResult d = decompose(s);
    std::set<PointSet> comps;
    for (const auto& c : d.components) comps.insert(c.gaps());
    json cj = json::array();
    for (const auto& c : comps) cj.push_back(points_json(c));
    return json{{"components", cj}, {"verified", verify_decomposition(s, d.components).verified()}};
  });
  for (Coord k : {3, 5, 8}) {
    r.emplace_back("antichain-" + std::to_string(k) + "-decomposition", [k] {
      const Semigroup s = antichain_k(k);
      const DecompositionResult d = decompose(s);
      return json{{"at_least_k", d.components.size() >= static_cast<std::size_t>(k)},
                  {"verified", verify_decomposition(s, d.components).verified()}};
    });
  }
  return r;
}

}  // namespace

int verify_paper(const std::string& golden_path, const std::string& only, bool as_json, std::ostream& out,
                 std::ostream& err) {
  json golden;
  try {
    if (golden_path.empty()) {
      golden = json::parse(kGoldenJson);
    } else {
      std::ifstream in(golden_path);
      if (!in) {
        err << "error: InvalidInput: cannot open " << golden_path << "\n";
        return kInputError;
      }
      golden = json::parse(in);
    }
  } catch (const json::parse_error& e) {
    err << "error: InvalidInput: malformed golden file: " << e.what() << "\n";
    return kInputError;
  }

  std::map<std::string, json> expected;
  for (const auto& row : golden.at("rows")) expected[row.at("id").get<std::string>()] = row.at("expected");

  json table = json::array();
  std::size_t failed = 0;
  bool matched = false;
  for (const auto& [id, compute] : rows()) {
    if (!only.empty() && id != only) continue;
    matched = true;
    json computed;
    try {
      computed = compute();
    } catch (const Error& e) {
      computed = std::string("error: ") + e.what();
    }
    const auto it = expected.find(id);
    const json exp = it == expected.end() ? json(nullptr) : it->second;
    const bool pass = it != expected.end() && exp == computed;
    failed += pass ? 0 : 1;
    table.push_back(json{{"id", id}, {"expected", exp}, {"computed", computed}, {"status", pass ? "pass" : "fail"}});
  }
  if (!matched) {
    err << "error: InvalidInput: no row named " << only << "\n";
    return kInputError;
  }

  if (as_json) {
    out << json{{"rows", table}, {"failed", failed}, {"passed", table.size() - failed}}.dump(2) << "\n";
  } else {
    for (const auto& row : table) {
      out << (row.at("status") == "pass" ? "PASS  " : "FAIL  ") << row.at("id").get<std::string>() << "\n";
      if (row.at("status") != "pass") {
        out << "      expected: " << row.at("expected").dump() << "\n";
        out << "      computed: " << row.at("computed").dump() << "\n";
      }
    }
    out << (table.size() - failed) << "/" << table.size() << " rows pass\n";
  }
  return failed == 0 ? kOk : kVerificationFailed;
}

}  // namespace csg::cli
