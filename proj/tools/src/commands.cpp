#include "commands.hpp"

#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"

namespace csg::cli {

namespace {

struct Common {
  std::string input;
  std::string format = "text";
  Coord bound = kDefaultSearchBound;
};

void add_common(CLI::App* app, Common& c, bool needs_input) {
  auto* opt = app->add_option("--input", c.input, "JSON document");
  if (needs_input) opt->required();
  app->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--bound", c.bound, "generator search bound");
}

void emit(std::ostream& out, const Common& c, const json& j) {
  if (c.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    write_text(out, j);
  }
}

// "1,3;3,1" -> {(1,3),(3,1)}
std::vector<Point> parse_point_list(const std::string& s) {
  std::vector<Point> out;
  std::stringstream rows(s);
  std::string row;
  while (std::getline(rows, row, ';')) {
    std::vector<Coord> c;
    std::stringstream cols(row);
    std::string x;
    while (std::getline(cols, x, ',')) {
      try {
        std::size_t used = 0;
        c.push_back(std::stoll(x, &used));
        if (used != x.size()) throw std::invalid_argument(x);
      } catch (const std::exception&) {
        fail(ErrorKind::InvalidInput, "not an integer: '" + x + "'");
      }
    }
    if (c.empty()) fail(ErrorKind::InvalidInput, "empty point in '" + s + "'");
    out.emplace_back(std::move(c));
  }
  for (const auto& p : out) require_dim(p, out.front().dim(), "point list");
  return out;
}

json construct_output(const Document& doc, const Semigroup& s, const std::optional<NumericalSemigroup>& ns,
                      json details) {
  json j{{"document", to_json(doc)}, {"report", invariant_report(s, ns)}};
  if (!details.is_null()) j["details"] = std::move(details);
  return j;
}

json numerical_construct(const NumericalSemigroup& ns, json details) {
  return construct_output(numerical_document(ns), ns.model(), ns, std::move(details));
}

json gapset_construct(const Semigroup& s, json details = nullptr) {
  return construct_output(gapset_document(s), s, std::nullopt, std::move(details));
}

struct SweepRow {
  std::size_t count = 0;
  std::size_t almost_symmetric = 0;
  std::size_t max_type_almost_symmetric = 0;
};

// Every generalized numerical semigroup in N^dim with at most `max_gaps`
// gaps, reached from N^dim by removing minimal generators one at a time.
json sweep(std::size_t dim, std::size_t max_gaps) {
  std::set<PointSet> seen{PointSet{}};
  std::vector<PointSet> frontier{PointSet{}};
  std::map<std::size_t, SweepRow> rows;
  const RationalCone cone = RationalCone::orthant(dim);
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (const PointSet& gaps : frontier) {
      const Semigroup s = Semigroup::from_gaps(cone, gaps);
      if (!gaps.empty()) {
        const InvariantReport r = classify(s);
        SweepRow& row = rows[s.min_generators().size()];
        ++row.count;
        if (r.flags.almost_symmetric) {
          ++row.almost_symmetric;
          row.max_type_almost_symmetric = std::max(row.max_type_almost_symmetric, r.type);
        }
      }
      if (gaps.size() == max_gaps) continue;
      for (const Point& g : s.min_generators()) {
        PointSet child = gaps;
        child.insert(g);
        if (seen.insert(child).second) next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  json out = json::array();
  for (const auto& [e, row] : rows) {
    out.push_back(json{{"embedding_dimension", e},
                       {"count", row.count},
                       {"almost_symmetric", row.almost_symmetric},
                       {"max_type_almost_symmetric", row.max_type_almost_symmetric}});
  }
  return json{{"dim", dim}, {"max_gaps", max_gaps}, {"rows", out}};
}

void report_error(std::ostream& err, const Error& e) {
  err << "error: " << e.what() << "\n";
  if (!e.witness().empty()) {
    err << "witness:";
    for (const auto& w : e.witness()) {
      err << " (";
      for (std::size_t i = 0; i < w.size(); ++i) err << (i ? "," : "") << w[i];
      err << ")";
    }
    err << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants and constructions of C-semigroups", "csg"};
  app.require_subcommand(1);
  int code = kOk;

  Common inv;
  auto* invariants = app.add_subcommand("invariants", "report the invariants of a semigroup");
  add_common(invariants, inv, true);
  invariants->callback([&] {
    const Document doc = read_document(inv.input);
    const auto ns = build_numerical(doc, inv.bound);
    const Semigroup s = ns ? ns->model() : build(doc, inv.bound);
    emit(out, inv, invariant_report(s, ns));
  });

  Common dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "decompose into irreducible C-semigroups");
  add_common(decompose_cmd, dec, true);
  decompose_cmd->callback([&] {
    const Document doc = read_document(dec.input);
    const Semigroup s = build(doc, dec.bound);
    const json j = decomposition_report(s);
    emit(out, dec, j);
    if (!j.at("verified").get<bool>()) code = kVerificationFailed;
  });

  auto* construct = app.add_subcommand("construct", "build a semigroup from a family");
  construct->require_subcommand(1);
  construct->fallthrough();
  Common con;
  add_common(construct, con, false);

  std::vector<Coord> s1, s2;
  Coord lambda = 0, mu = 0;
  auto* glue_cmd = construct->add_subcommand("glue", "gluing of two numerical semigroups");
  glue_cmd->add_option("--s1", s1)->required()->delimiter(',');
  glue_cmd->add_option("--s2", s2)->required()->delimiter(',');
  glue_cmd->add_option("--lambda", lambda)->required();
  glue_cmd->add_option("--mu", mu)->required();
  glue_cmd->callback([&] {
    const GluingResult r = glue(NumericalSemigroup(s1), NumericalSemigroup(s2), lambda, mu);
    emit(out, con,
         numerical_construct(r.semigroup, json{{"pf_formula", r.pf_formula},
                                               {"type_formula", r.type_formula},
                                               {"frobenius_formula", r.frobenius_formula}}));
  });

  std::vector<Coord> base, coeffs;
  Coord p = 0;
  auto* nice = construct->add_subcommand("nice-extension", "nice extension of a numerical semigroup");
  nice->add_option("--s", base)->required()->delimiter(',');
  nice->add_option("--a", coeffs)->required()->delimiter(',');
  nice->add_option("--p", p)->required();
  nice->callback([&] {
    const NumericalSemigroup before(base);
    const NumericalSemigroup after = nice_extension(before, coeffs, p);
    emit(out, con,
         numerical_construct(after, json{{"reduced_type_before", before.reduced_type()},
                                         {"reduced_type_after", after.reduced_type()}}));
  });

  Coord h = 0;
  auto* bres = construct->add_subcommand("bresinsky", "Bresinsky numerical semigroup");
  bres->set_help_flag("--help", "Print this help message and exit");
  bres->add_option("--h", h)->required();
  bres->callback([&] {
    const BresinskyResult r = bresinsky(h);
    emit(out, con,
         numerical_construct(r.semigroup, json{{"pf_formula", r.pf_formula},
                                               {"frobenius_formula", r.frobenius_formula},
                                               {"reduced_type", r.reduced_type}}));
  });

  std::vector<Coord> tgens;
  std::size_t tdim = 2;
  auto* tg = construct->add_subcommand("tgraded", "points of N^d whose coordinate sum lies in T");
  tg->add_option("--t", tgens)->required()->delimiter(',');
  tg->add_option("--d", tdim)->required();
  tg->callback([&] { emit(out, con, gapset_construct(t_graded(NumericalSemigroup(tgens), tdim))); });

  std::vector<Coord> thick_base;
  Coord k = 0;
  std::size_t axis = 1;
  auto* thick = construct->add_subcommand("thicken", "k-thickening of a generalized numerical semigroup");
  thick->add_option("--s", thick_base, "numerical generators")->delimiter(',');
  thick->add_option("--k", k)->required();
  thick->add_option("--axis", axis)->required();
  thick->callback([&] {
    Semigroup s = [&] {
      if (!thick_base.empty()) return NumericalSemigroup(thick_base).model();
      if (con.input.empty()) fail(ErrorKind::InvalidInput, "thicken needs --s or --input");
      const Document doc = read_document(con.input);
      const auto ns = build_numerical(doc, con.bound);
      return ns ? ns->model() : build(doc, con.bound);
    }();
    emit(out, con, gapset_construct(thicken(s, k, axis)));
  });

  Coord fa = 0, fr = 0;
  std::size_t fd = 2;
  auto* sf = construct->add_subcommand("sfamily", "the S(a,r) family in N^d");
  sf->add_option("--a", fa)->required();
  sf->add_option("--r", fr)->required();
  sf->add_option("--d", fd)->required();
  sf->callback([&] {
    const SFamilyResult r = s_family(fa, fr, fd);
    Document doc;
    doc.kind = Document::Kind::Generators;
    doc.generators = s_family_generators(fa, fr, fd);
    doc.bound = r.semigroup.search_bound();
    emit(out, con,
         construct_output(doc, r.semigroup, std::nullopt,
                          json{{"p", r.p},
                               {"witnesses", points_json(r.witnesses)},
                               {"type_lower_bound", r.type_lower_bound},
                               {"embedding_dimension", r.embedding_dimension}}));
  });

  std::string rays_s, points_s;
  auto* anti = construct->add_subcommand("antichain", "cone minus the down-set of an antichain");
  anti->add_option("--rays", rays_s, "cone rays, e.g. 1,2;3,1 (default: the orthant)");
  anti->add_option("--points", points_s, "antichain, e.g. 1,3;3,1")->required();
  anti->callback([&] {
    const auto pts = parse_point_list(points_s);
    const RationalCone cone =
        rays_s.empty() ? RationalCone::orthant(pts.front().dim()) : RationalCone::from_rays(parse_point_list(rays_s));
    emit(out, con, gapset_construct(antichain_semigroup(cone, PointSet(pts.begin(), pts.end()))));
  });

  std::string golden, only;
  std::string vformat = "text";
  auto* verify = app.add_subcommand("verify-paper", "re-derive the worked examples");
  verify->add_option("--golden", golden, "expected values (default: built in)");
  verify->add_option("--only", only, "run a single row");
  verify->add_option("--format", vformat)->check(CLI::IsMember({"json", "text"}));
  verify->callback([&] { code = verify_paper(golden, only, vformat == "json", out, err); });

  Common sw;
  std::size_t sweep_dim = 2, sweep_gaps = 5;
  auto* sweep_cmd = app.add_subcommand("sweep", "type data for almost symmetric GNS, by embedding dimension");
  sweep_cmd->add_option("--dim", sweep_dim);
  sweep_cmd->add_option("--max-gaps", sweep_gaps);
  sweep_cmd->add_option("--format", sw.format)->check(CLI::IsMember({"json", "text"}));
  sweep_cmd->callback([&] { emit(out, sw, sweep(sweep_dim, sweep_gaps)); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.get_name() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    report_error(err, e);
    return e.kind() == ErrorKind::InternalInconsistency ? kVerificationFailed : kInputError;
  }
  return code;
}

}  // namespace csg::cli
