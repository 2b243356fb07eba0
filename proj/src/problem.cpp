#include "problem.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include <json.hpp>

#include "errors.hpp"

namespace fano_toric {

const std::vector<std::string> kTasks{"faces", "cayley", "smooth", "degrees", "expected-dim", "check", "count", "analyze"};

bool is_task(std::string_view task) { return std::find(kTasks.begin(), kTasks.end(), task) != kTasks.end(); }

namespace {

using nlohmann::json;

class Collector {
 public:
  void add(const std::string& where, const std::string& what) { errors_.push_back(where + ": " + what); }
  bool empty() const { return errors_.empty(); }
  [[noreturn]] void raise() { throw ValidationError(errors_); }

 private:
  std::vector<std::string> errors_;
};

std::optional<Int> as_int(const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
      return std::nullopt;
    return v.get<Int>();
  }
  return std::nullopt;
}

std::optional<IntVector> int_vector(const json& v, const std::string& where, Collector& errors) {
  if (!v.is_array()) {
    errors.add(where, "expected an array of integers");
    return std::nullopt;
  }
  IntVector out;
  bool ok = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (auto x = as_int(v[i])) {
      out.push_back(*x);
    } else {
      errors.add(where + "[" + std::to_string(i) + "]", "not an integer");
      ok = false;
    }
  }
  if (!ok) return std::nullopt;
  return out;
}

std::optional<DivisorSpec> divisor_spec(const json& v, const std::string& where, Collector& errors) {
  if (!v.is_object() || v.size() != 1 || !(v.contains("coefficients") || v.contains("normal"))) {
    errors.add(where, "expected {\"coefficients\": [...]} or {\"normal\": [...]}");
    return std::nullopt;
  }
  const bool coeffs = v.contains("coefficients");
  auto values = int_vector(coeffs ? v["coefficients"] : v["normal"], where + (coeffs ? ".coefficients" : ".normal"),
                           errors);
  if (!values) return std::nullopt;
  return DivisorSpec{coeffs ? DivisorSpec::Kind::coefficients : DivisorSpec::Kind::normal, std::move(*values)};
}

bool valid_name(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

std::vector<std::pair<Int, std::string>> parse_class_expression(std::string_view text) {
  std::vector<std::pair<Int, std::string>> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& what) -> ValidationError {
    return ValidationError("class \"" + std::string(text) + "\": " + what);
  };
  skip();
  if (i == text.size()) throw fail("empty expression");
  bool first = true;
  while (i < text.size()) {
    Int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected + or - at offset " + std::to_string(i));
    }
    Int coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        if (coeff > (std::numeric_limits<Int>::max() - 9) / 10) throw fail("coefficient too large");
        coeff = coeff * 10 + (text[i++] - '0');
      }
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    std::size_t start = i;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
    std::string name(text.substr(start, i - start));
    if (!valid_name(name)) throw fail("expected a class name at offset " + std::to_string(start));
    terms.emplace_back(sign * coeff, name);
    skip();
    first = false;
  }
  return terms;
}

ProblemFile parse_problem(std::string_view bytes) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("problem: expected a JSON object");

  Collector errors;
  ProblemFile out;
  static const std::set<std::string> known{"points", "basis", "classes", "k", "task", "structure", "description"};
  for (const auto& [key, _] : doc.items())
    if (!known.count(key)) errors.add(key, "unknown field");

  if (!doc.contains("points")) {
    errors.add("points", "missing");
  } else if (const auto& rows = doc["points"]; !rows.is_array() || rows.empty()) {
    errors.add("points", "expected a non-empty matrix (array of rows)");
  } else {
    std::vector<IntVector> matrix;
    bool ok = true;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto row = int_vector(rows[r], "points[" + std::to_string(r) + "]", errors);
      if (!row) {
        ok = false;
        continue;
      }
      if (const auto width = rows[0].is_array() ? rows[0].size() : row->size(); row->size() != width) {
        errors.add("points[" + std::to_string(r) + "]",
                   "row length " + std::to_string(row->size()) + " differs from " + std::to_string(width));
        ok = false;
      }
      matrix.push_back(std::move(*row));
    }
    if (ok && matrix.front().empty()) {
      errors.add("points", "empty configuration");
    } else if (ok) {
      out.points.assign(matrix.front().size(), IntVector(matrix.size()));
      for (std::size_t r = 0; r < matrix.size(); ++r)
        for (std::size_t c = 0; c < matrix[r].size(); ++c) out.points[c][r] = matrix[r][c];
    }
  }

  std::set<std::string> names;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_object()) {
      errors.add("basis", "expected an object mapping names to divisors");
    } else {
      for (const auto& [name, spec] : doc["basis"].items()) {
        if (!valid_name(name)) {
          errors.add("basis." + name, "invalid name");
          continue;
        }
        if (auto d = divisor_spec(spec, "basis." + name, errors)) {
          out.basis.emplace_back(name, std::move(*d));
          names.insert(name);
        }
      }
    }
  }

  if (!doc.contains("classes")) {
    errors.add("classes", "missing");
  } else if (!doc["classes"].is_array()) {
    errors.add("classes", "expected an array");
  } else {
    const auto& list = doc["classes"];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = "classes[" + std::to_string(i) + "]";
      ClassSpec c;
      if (list[i].is_string()) {
        c.text = list[i].get<std::string>();
        try {
          c.terms = parse_class_expression(c.text);
        } catch (const ValidationError& e) {
          errors.add(where, e.what());
          continue;
        }
        for (const auto& [coeff, name] : c.terms)
          if (!names.count(name)) errors.add(where, "unknown class name \"" + name + "\"");
      } else if (auto d = divisor_spec(list[i], where, errors)) {
        c.text = list[i].dump();
        c.literal = std::move(*d);
      } else {
        continue;
      }
      out.classes.push_back(std::move(c));
    }
  }

  if (doc.contains("k")) {
    auto k = as_int(doc["k"]);
    if (!k || *k < 0 || *k > 1000)
      errors.add("k", "expected a non-negative integer");
    else
      out.k = static_cast<int>(*k);
  }

  if (doc.contains("task")) {
    if (!doc["task"].is_string() || !is_task(doc["task"].get<std::string>()))
      errors.add("task", "unknown task " + doc["task"].dump());
    else
      out.task = doc["task"].get<std::string>();
  }

  if (doc.contains("structure")) {
    const auto& s = doc["structure"];
    if (!s.is_object() || s.size() != 1 || !s.contains("fibers") || !s["fibers"].is_array() || s["fibers"].size() < 2) {
      errors.add("structure", "expected {\"fibers\": [[...], [...], ...]} with at least two fibers");
    } else {
      std::vector<std::vector<std::size_t>> fibers;
      bool ok = true;
      for (std::size_t f = 0; f < s["fibers"].size(); ++f) {
        const std::string where = "structure.fibers[" + std::to_string(f) + "]";
        auto members = int_vector(s["fibers"][f], where, errors);
        if (!members || members->empty()) {
          if (members) errors.add(where, "empty fiber");
          ok = false;
          continue;
        }
        std::vector<std::size_t> fiber;
        for (auto x : *members) {
          if (x < 0 || (!out.points.empty() && static_cast<std::size_t>(x) >= out.points.size())) {
            errors.add(where, "point index " + std::to_string(x) + " out of range");
            ok = false;
          }
          fiber.push_back(static_cast<std::size_t>(std::max<Int>(x, 0)));
        }
        fibers.push_back(std::move(fiber));
      }
      if (ok) out.structure = std::move(fibers);
    }
  }

  if (!errors.empty()) errors.raise();
  return out;
}

}  // namespace fano_toric
