#include "report.hpp"

namespace csg::cli {

namespace {

json flags_json(const ClassificationFlags& f) {
  return json{{"almost_symmetric", f.almost_symmetric},
              {"irreducible", f.irreducible},
              {"maximal_reduced_type", f.maximal_reduced_type},
              {"minimal_reduced_type", f.minimal_reduced_type},
              {"quasi_irreducible", f.quasi_irreducible},
              {"quasi_symmetric", f.quasi_symmetric},
              {"symmetric", f.symmetric}};
}

std::string tuple(const json& p) {
  if (!p.is_array()) return p.dump();
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].dump();
  return s + ")";
}

bool is_point_list(const json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (!e.is_number_integer() && !(e.is_array() && !e.empty() && e[0].is_number_integer())) return false;
  }
  return true;
}

}  // namespace

json invariant_report(const Semigroup& s, const std::optional<NumericalSemigroup>& numerical) {
  json j;
  j["dim"] = s.dim();
  j["c_semigroup"] = s.is_c_semigroup();
  j["min_generators"] = points_json(s.min_generators());
  j["extremal_rays"] = points_json(s.extremal_rays());
  if (numerical) {
    j["numerical"] = json{{"frobenius", numerical->frobenius()},
                          {"multiplicity", numerical->multiplicity()},
                          {"genus", numerical->gaps().size()},
                          {"embedding_dimension", numerical->embedding_dimension()},
                          {"pf", numerical->pseudo_frobenius()},
                          {"type", numerical->type()},
                          {"reduced_type", numerical->reduced_type()}};
  }
  if (!s.is_c_semigroup()) {
    const AperySet ap = s.apery_wrt_E();
    j["apery_wrt_E"] = points_json(ap.elements);
    j["apery_maximals"] = points_json(ap.maximal_elements);
    j["conductor_minimal_elements"] = points_json(s.conductor_minimal_elements());
    j["reduced_type_wrt_E"] = reduced_type_wrt_E(s);
    return j;
  }
  j["gaps"] = points_json(s.gaps());
  const InvariantReport r = classify(s);
  j["trivial_full"] = r.trivial_full;
  if (r.trivial_full) return j;
  j["pf"] = points_json(r.pf);
  j["sg"] = points_json(r.sg);
  j["fa"] = points_json(r.fa);
  j["max_gaps_cone"] = points_json(r.max_gaps_cone);
  j["f_cone"] = r.f_cone ? point_json(*r.f_cone) : json(nullptr);
  j["conductor_complement"] = points_json(r.conductor_complement);
  j["type"] = r.type;
  json rt = json::array();
  for (const auto& [ray, value] : r.reduced_type) rt.push_back(json{{"ray", point_json(ray)}, {"value", value}});
  j["reduced_type"] = rt;
  j["tau"] = r.tau;
  j["flags"] = flags_json(r.flags);
  return j;
}

json decomposition_report(const Semigroup& s) {
  const DecompositionResult r = decompose(s);
  const DecompositionCheck chk = verify_decomposition(s, r.components);
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(to_json(gapset_document(c)));
  json cover = json::array();
  for (const auto& [gap, idx] : r.cover_map) cover.push_back(json{{"gap", point_json(gap)}, {"component", idx}});
  return json{{"components", comps},
              {"cover_map", cover},
              {"lower_bound", r.lower_bound},
              {"exact_minimum", r.exact_minimum},
              {"checks",
               json{{"intersection_equals", chk.intersection_equals},
                    {"special_gaps_are_gaps", chk.special_gaps_are_gaps},
                    {"k_sets_cover", chk.k_sets_cover}}},
              {"verified", chk.verified()}};
}

void write_text(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!j.is_object()) {
    os << pad << j.dump() << "\n";
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n";
      write_text(os, value, indent + 2);
    } else if (is_point_list(value)) {
      std::string s = "{";
      for (std::size_t i = 0; i < value.size(); ++i) s += (i ? ", " : "") + tuple(value[i]);
      os << pad << key << " = " << s << "}  [" << value.size() << "]\n";
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      os << pad << key << ":\n";
      for (const auto& e : value) {
        std::string line;
        for (const auto& [k, v] : e.items()) {
          line += (line.empty() ? "" : "  ") + k + "=" + (v.is_array() ? tuple(v) : v.dump());
        }
        os << pad << "  " << line << "\n";
      }
    } else {
      os << pad << key << " = " << (value.is_array() ? tuple(value) : value.dump()) << "\n";
    }
  }
}

}  // namespace csg::cli
