#include "report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "chow.hpp"
#include "errors.hpp"

namespace fano_toric {

namespace {

using nlohmann::ordered_json;

int task_level(const std::string& task) {
  static const std::map<std::string, int> levels{{"smooth", 0}, {"faces", 0},        {"cayley", 1},
                                                 {"degrees", 2}, {"expected-dim", 3}, {"check", 4},
                                                 {"count", 5},  {"analyze", 5}};
  return levels.at(task);
}

// Normals are read in input coordinates; the facet is matched by its member set.
ToricDivisor resolve(const FaceLattice& lat, const PointConfiguration& a, const DivisorSpec& spec,
                     const std::string& where, std::vector<std::string>& errors) {
  const auto m = lat.facets().size();
  if (spec.kind == DivisorSpec::Kind::coefficients) {
    if (spec.values.size() != m) {
      errors.push_back(where + ": expected " + std::to_string(m) + " facet coefficients, got " +
                       std::to_string(spec.values.size()));
      return {IntVector(m, 0)};
    }
    return {spec.values};
  }
  if (spec.values.size() != a.ambient_rank()) {
    errors.push_back(where + ": normal has " + std::to_string(spec.values.size()) + " entries, expected " +
                     std::to_string(a.ambient_rank()));
    return {IntVector(m, 0)};
  }
  Int best = 0;
  IndexSet argmin(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Int v = dot(spec.values, a[i]);
    if (i == 0 || v < best) {
      best = v;
      argmin = IndexSet(a.size());
    }
    if (v == best) argmin.insert(i);
  }
  for (std::size_t f = 0; f < m; ++f)
    if (lat.facets()[f].members == argmin) return facet_divisor(lat, f);
  errors.push_back(where + ": normal " + format_vector(spec.values) + " does not support a facet");
  return {IntVector(m, 0)};
}

CayleyStructure explicit_structure(const FaceLattice& lat, const std::vector<std::vector<std::size_t>>& fibers) {
  const auto n = lat.configuration().size();
  IndexSet face(n);
  std::vector<IndexSet> sets;
  for (const auto& f : fibers) {
    IndexSet s(n);
    for (auto i : f) {
      if (face.contains(i)) throw ValidationError("structure: point " + std::to_string(i) + " is in two fibers");
      s.insert(i);
      face.insert(i);
    }
    sets.push_back(std::move(s));
  }
  if (!lat.is_face(face)) throw ValidationError("structure: the union of the fibers is not a face");
  auto p = make_cayley_structure(lat, face, std::move(sets));
  if (!preserves_affine_relations(lat.configuration(), p))
    throw ValidationError("structure: the fibers are not cut out by an affine map onto a simplex");
  return p;
}

ConditionRecord record(const Condition& c) { return {c.id, c.statement, to_string(c.verdict), c.witness}; }

std::string decimal(const mpz_class& z) { return z.get_str(); }

}  // namespace

Report run(const ProblemFile& problem, const RunOptions& options) {
  Report out;
  out.task = options.task.value_or(problem.task);
  if (out.task.empty()) throw ValidationError("task: not given in the problem file or on the command line");
  if (!is_task(out.task)) throw ValidationError("task: unknown task \"" + out.task + "\"");
  out.k = options.k.value_or(problem.k);
  if (out.k < 0) throw ValidationError("k: must be non-negative");
  const int level = task_level(out.task);

  PointConfiguration input(problem.points);
  // Smoothness and all analysis happen in the lattice the points generate.
  auto normalized = normalize_configuration(input);
  const FaceLattice lat(normalized.configuration, options.max_faces);

  auto& conf = out.configuration;
  conf.points = input.size();
  conf.ambient_rank = input.ambient_rank();
  conf.dim = lat.dim();
  conf.normalized = normalized.map.is_identity();
  conf.smooth = lat.smooth();
  conf.vertices = lat.vertices();
  for (const auto& f : lat.facets()) conf.facets.push_back({f.members.elements(), f.normal, f.offset});
  if (!conf.normalized)
    out.warnings.push_back("input points do not generate the ambient lattice; facet normals are in the coordinates "
                           "of the lattice they generate");
  if (!conf.smooth && level >= 2)
    out.warnings.push_back("configuration is not smooth: restriction degrees and counts are unavailable");

  std::vector<std::string> errors;
  std::map<std::string, ToricDivisor> basis;
  for (const auto& [name, spec] : problem.basis) basis.emplace(name, resolve(lat, input, spec, "basis." + name, errors));
  std::vector<ToricDivisor> classes;
  for (std::size_t i = 0; i < problem.classes.size(); ++i) {
    const auto& c = problem.classes[i];
    ToricDivisor d{IntVector(lat.facets().size(), 0)};
    if (c.literal) {
      d = resolve(lat, input, *c.literal, "classes[" + std::to_string(i) + "]", errors);
    } else {
      for (const auto& [coeff, name] : c.terms) {
        auto it = basis.find(name);
        if (it == basis.end())
          errors.push_back("classes[" + std::to_string(i) + "]: unknown class name \"" + name + "\"");
        else
          d = d + coeff * it->second;
      }
    }
    classes.push_back(d);
    out.classes.push_back({c.text, d.coeffs});
  }
  if (!errors.empty()) throw ValidationError(errors);

  if (out.task == "faces") {
    out.faces.emplace();
    for (const auto& f : lat.faces()) out.faces->push_back({f.members.elements(), f.dim});
  }
  if (level < 1) return out;

  const CayleyOptions cayley{1, options.max_nodes, options.threads};
  std::vector<CayleyStructure> selected;
  if (problem.structure) {
    selected.push_back(explicit_structure(lat, *problem.structure));
    if (selected.front().length() < out.k)
      throw ValidationError("structure: length " + std::to_string(selected.front().length()) + " is less than k = " +
                            std::to_string(out.k));
  } else {
    for (auto& p : maximal_cayley_structures(lat, cayley))
      if (p.length() >= out.k) selected.push_back(std::move(p));
  }
  std::vector<CayleyStructure> all;
  if (level >= 4) all = enumerate_cayley_structures(lat, cayley);

  out.components.emplace();
  mpz_class total = 0;
  bool complete = true;
  for (const auto& p : selected) {
    ComponentRecord c;
    c.face = p.face.elements();
    c.face_dim = p.face_dim;
    c.length = p.length();
    for (const auto& f : p.fibers) c.fibers.push_back(f.elements());
    c.component_dim = component_dimension(p, out.k);
    const AnalysisInput in{&lat, p, classes, out.k};
    if (level >= 2) {
      try {
        validate_input(in);
      } catch (const PreconditionError& e) {
        throw ValidationError(e.what());
      }
    }
    if (level >= 2 && lat.smooth()) {
      c.deltas = restriction_degrees(in);
      if (out.task == "degrees" || out.task == "analyze") {
        c.surjective.emplace();
        for (const auto& d : classes) c.surjective->push_back(restricts_surjectively(lat, d, p));
      }
    }
    if (level >= 3 && c.deltas) c.phi = expected_dimension(p.face_dim, p.length(), out.k, *c.deltas);
    if (level >= 4) {
      auto h = check_hypotheses(in, {HypothesisMode::both, options.threads, all, options.max_nodes});
      HypothesisRecord r;
      r.theorem = to_string(h.theorem_holds);
      r.corollary = to_string(h.corollary_holds);
      r.ddagger = to_string(h.ddagger);
      for (const auto& x : h.theorem) r.theorem_conditions.push_back(record(x));
      for (const auto& x : h.corollary) r.corollary_conditions.push_back(record(x));
      r.verdict = h.verdict;
      r.countable = h.countable;
      if (level >= 5) {
        if (h.countable) {
          auto n = count_k_planes(lat, p, out.k, *h.deltas, {options.seed, options.threads, options.max_fixed_points, 0});
          c.count = decimal(n);
          total += n;
        } else {
          c.note = "not counted: " + h.verdict;
          complete = false;
        }
      }
      c.hypotheses = std::move(r);
    }
    out.components->push_back(std::move(c));
  }
  if (level >= 5) {
    out.totals = Totals{decimal(total), complete};
    if (!complete) out.warnings.push_back("total covers only the components with a certified count");
  }
  return out;
}

bool hypotheses_unsatisfied(const Report& report) {
  return report.task == "count" && report.totals && !report.totals->complete;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

ordered_json conditions_json(const std::vector<ConditionRecord>& list) {
  auto out = ordered_json::array();
  for (const auto& c : list) {
    ordered_json j;
    j["id"] = c.id;
    j["statement"] = c.statement;
    j["verdict"] = c.verdict;
    if (!c.witness.empty()) j["witness"] = c.witness;
    out.push_back(std::move(j));
  }
  return out;
}

template <class T>
T field(const ordered_json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("report: missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const ordered_json::exception& e) {
    throw ValidationError(std::string("report: field \"") + key + "\": " + e.what());
  }
}

std::vector<ConditionRecord> conditions_from(const ordered_json& list) {
  std::vector<ConditionRecord> out;
  for (const auto& c : list)
    out.push_back({field<std::string>(c, "id"), field<std::string>(c, "statement"), field<std::string>(c, "verdict"),
                   c.value("witness", std::string{})});
  return out;
}

}  // namespace

std::string to_json(const Report& r) {
  ordered_json j;
  j["format"] = "fano-toric-report";
  j["version"] = 1;
  j["task"] = r.task;
  j["k"] = r.k;
  const auto& c = r.configuration;
  ordered_json conf;
  conf["points"] = c.points;
  conf["ambient_rank"] = c.ambient_rank;
  conf["dim"] = c.dim;
  conf["normalized"] = c.normalized;
  conf["smooth"] = c.smooth;
  conf["vertices"] = c.vertices;
  conf["facets"] = ordered_json::array();
  for (const auto& f : c.facets) {
    ordered_json x;
    x["members"] = f.members;
    x["normal"] = f.normal;
    x["offset"] = f.offset;
    conf["facets"].push_back(std::move(x));
  }
  j["configuration"] = std::move(conf);
  j["classes"] = ordered_json::array();
  for (const auto& x : r.classes) j["classes"].push_back({{"expression", x.expression}, {"coefficients", x.coefficients}});
  if (r.faces) {
    j["faces"] = ordered_json::array();
    for (const auto& f : *r.faces) j["faces"].push_back({{"members", f.members}, {"dim", f.dim}});
  }
  if (r.components) {
    j["components"] = ordered_json::array();
    for (const auto& x : *r.components) {
      ordered_json comp;
      comp["face"] = x.face;
      comp["face_dim"] = x.face_dim;
      comp["length"] = x.length;
      comp["fibers"] = x.fibers;
      comp["component_dim"] = x.component_dim;
      if (x.deltas) comp["deltas"] = *x.deltas;
      if (x.surjective) comp["surjective"] = *x.surjective;
      if (x.phi) comp["phi"] = *x.phi;
      if (x.hypotheses) {
        const auto& h = *x.hypotheses;
        ordered_json hyp;
        hyp["theorem"] = h.theorem;
        hyp["corollary"] = h.corollary;
        hyp["ddagger"] = h.ddagger;
        hyp["theorem_conditions"] = conditions_json(h.theorem_conditions);
        hyp["corollary_conditions"] = conditions_json(h.corollary_conditions);
        hyp["verdict"] = h.verdict;
        hyp["countable"] = h.countable;
        comp["hypotheses"] = std::move(hyp);
      }
      if (x.count) comp["count"] = *x.count;
      if (!x.note.empty()) comp["note"] = x.note;
      j["components"].push_back(std::move(comp));
    }
  }
  if (r.totals) j["totals"] = {{"count", r.totals->count}, {"complete", r.totals->complete}};
  j["warnings"] = r.warnings;
  return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    throw ValidationError(std::string("report: malformed JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", std::string{}) != "fano-toric-report")
    throw ValidationError("report: not a fano-toric report");
  Report r;
  r.task = field<std::string>(j, "task");
  r.k = field<int>(j, "k");
  const auto& conf = j.at("configuration");
  auto& c = r.configuration;
  c.points = field<std::size_t>(conf, "points");
  c.ambient_rank = field<std::size_t>(conf, "ambient_rank");
  c.dim = field<int>(conf, "dim");
  c.normalized = field<bool>(conf, "normalized");
  c.smooth = field<bool>(conf, "smooth");
  c.vertices = field<std::vector<std::size_t>>(conf, "vertices");
  for (const auto& f : conf.at("facets"))
    c.facets.push_back(
        {field<std::vector<std::size_t>>(f, "members"), field<IntVector>(f, "normal"), field<Int>(f, "offset")});
  for (const auto& x : j.at("classes"))
    r.classes.push_back({field<std::string>(x, "expression"), field<IntVector>(x, "coefficients")});
  if (j.contains("faces")) {
    r.faces.emplace();
    for (const auto& f : j["faces"]) r.faces->push_back({field<std::vector<std::size_t>>(f, "members"), field<int>(f, "dim")});
  }
  if (j.contains("components")) {
    r.components.emplace();
    for (const auto& x : j["components"]) {
      ComponentRecord comp;
      comp.face = field<std::vector<std::size_t>>(x, "face");
      comp.face_dim = field<int>(x, "face_dim");
      comp.length = field<int>(x, "length");
      comp.fibers = field<std::vector<std::vector<std::size_t>>>(x, "fibers");
      comp.component_dim = field<int>(x, "component_dim");
      if (x.contains("deltas")) comp.deltas = field<std::vector<int>>(x, "deltas");
      if (x.contains("surjective")) comp.surjective = field<std::vector<bool>>(x, "surjective");
      if (x.contains("phi")) comp.phi = field<int>(x, "phi");
      if (x.contains("hypotheses")) {
        const auto& h = x["hypotheses"];
        comp.hypotheses = HypothesisRecord{field<std::string>(h, "theorem"),
                                           field<std::string>(h, "corollary"),
                                           field<std::string>(h, "ddagger"),
                                           conditions_from(h.at("theorem_conditions")),
                                           conditions_from(h.at("corollary_conditions")),
                                           field<std::string>(h, "verdict"),
                                           field<bool>(h, "countable")};
      }
      if (x.contains("count")) comp.count = field<std::string>(x, "count");
      comp.note = x.value("note", std::string{});
      r.components->push_back(std::move(comp));
    }
  }
  if (j.contains("totals")) r.totals = Totals{field<std::string>(j["totals"], "count"), field<bool>(j["totals"], "complete")};
  r.warnings = field<std::vector<std::string>>(j, "warnings");
  return r;
}

// ---------------------------------------------------------------------------
// Text

namespace {

template <class T>
std::string list(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string fibers_text(const std::vector<std::vector<std::size_t>>& fibers) {
  std::string s;
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    if (i) s += " | ";
    for (std::size_t j = 0; j < fibers[i].size(); ++j) s += (j ? "," : "") + std::to_string(fibers[i][j]);
  }
  return s;
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << "  " << line << "\n";
  }
  return out.str();
}

}  // namespace

std::string to_text(const Report& r) {
  std::ostringstream out;
  const auto& c = r.configuration;
  out << "task " << r.task << ", k = " << r.k << "\n";
  out << "configuration: " << c.points << " points in Z^" << c.ambient_rank << ", dim " << c.dim << ", "
      << c.vertices.size() << " vertices, " << c.facets.size() << " facets, " << (c.smooth ? "smooth" : "not smooth")
      << (c.normalized ? "" : ", not normalized") << "\n";
  if (r.task == "faces" || r.task == "smooth") {
    std::vector<std::vector<std::string>> rows{{"facet", "normal", "offset", "points"}};
    for (std::size_t i = 0; i < c.facets.size(); ++i)
      rows.push_back({std::to_string(i), format_vector(c.facets[i].normal), std::to_string(c.facets[i].offset),
                      list(c.facets[i].members)});
    out << table(rows);
  }
  for (std::size_t i = 0; i < r.classes.size(); ++i)
    out << "class " << i + 1 << ": " << r.classes[i].expression << " = " << format_vector(r.classes[i].coefficients)
        << "\n";
  if (r.faces) {
    std::vector<std::vector<std::string>> rows{{"dim", "points"}};
    for (const auto& f : *r.faces) rows.push_back({std::to_string(f.dim), list(f.members)});
    out << "faces:\n" << table(rows);
  }
  if (r.components) {
    std::vector<std::vector<std::string>> rows{{"#", "dim tau", "l", "fibers", "dim Z"}};
    bool deltas = false, phi = false, hyp = false, count = false;
    for (const auto& x : *r.components) {
      deltas |= x.deltas.has_value();
      phi |= x.phi.has_value();
      hyp |= x.hypotheses.has_value();
      count |= x.count.has_value() || !x.note.empty();
    }
    if (deltas) rows[0].push_back("deltas");
    if (phi) rows[0].push_back("phi");
    if (hyp) rows[0].insert(rows[0].end(), {"theorem", "corollary", "ddagger"});
    if (count) rows[0].push_back("count");
    for (std::size_t i = 0; i < r.components->size(); ++i) {
      const auto& x = (*r.components)[i];
      std::vector<std::string> row{std::to_string(i), std::to_string(x.face_dim), std::to_string(x.length),
                                   fibers_text(x.fibers), std::to_string(x.component_dim)};
      if (deltas) row.push_back(x.deltas ? list(*x.deltas) : "-");
      if (phi) row.push_back(x.phi ? std::to_string(*x.phi) : "-");
      if (hyp) {
        if (x.hypotheses)
          row.insert(row.end(), {x.hypotheses->theorem, x.hypotheses->corollary, x.hypotheses->ddagger});
        else
          row.insert(row.end(), {"-", "-", "-"});
      }
      if (count) row.push_back(x.count.value_or("-"));
      rows.push_back(std::move(row));
    }
    out << "components:\n" << table(rows);
    for (std::size_t i = 0; i < r.components->size(); ++i) {
      const auto& x = (*r.components)[i];
      if (x.surjective) {
        out << "  [" << i << "] surjective restriction:";
        for (bool b : *x.surjective) out << (b ? " yes" : " no");
        out << "\n";
      }
      if (!x.hypotheses) continue;
      out << "  [" << i << "] " << x.hypotheses->verdict << "\n";
      for (const auto& [name, group] : {std::pair{"theorem", &x.hypotheses->theorem_conditions},
                                        std::pair{"corollary", &x.hypotheses->corollary_conditions}})
        for (const auto& cond : *group)
          if (cond.verdict != "holds")
            out << "      " << name << " (" << cond.id << ") " << cond.verdict
                << (cond.witness.empty() ? "" : ": " + cond.witness) << "\n";
      if (!x.note.empty()) out << "      " << x.note << "\n";
    }
  }
  if (r.totals) out << "total: " << r.totals->count << (r.totals->complete ? "" : " (incomplete)") << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace fano_toric
