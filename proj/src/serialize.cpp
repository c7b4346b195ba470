#include "bent/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "bent/error.hpp"

namespace bent {

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (const Complex& z : v) out.push_back(to_json(z));
  return out;
}

ComplexVector complex_vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected a list of [re, im] pairs");
  ComplexVector out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw InvalidInput("expected [re, im] pair, got " + e.dump());
    }
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

Json group_to_json(const Group& g) {
  Json cayley = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    cayley.push_back(std::move(row));
  }
  return {{"name", g.name()}, {"order", g.order()}, {"cayley", cayley}, {"identity", g.identity()}};
}

Group group_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("group JSON must be an object");
  try {
    const std::string name = j.at("name").get<std::string>();
    const int order = j.at("order").get<int>();
    const int identity = j.at("identity").get<int>();
    const Json& rows = j.at("cayley");
    if (!rows.is_array() || static_cast<int>(rows.size()) != order) {
      throw InvalidInput("cayley must have " + std::to_string(order) + " rows");
    }
    std::vector<int> cayley;
    cayley.reserve(static_cast<size_t>(order) * order);
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != order) {
        throw InvalidInput("every cayley row must have " + std::to_string(order) + " entries");
      }
      for (const auto& v : row) cayley.push_back(v.get<int>());
    }
    Group g = Group::FromCayley(name, order, std::move(cayley), identity);
    try {
      Group known = group_from_label(name);
      if (known.same_table(g)) return known;
    } catch (const Error&) {
    }
    return g;
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed group JSON: ") + e.what());
  }
}

Json char_table_to_json(const CharacterTable& ct) {
  const Group& g = ct.group();
  Json classes = Json::array(), sizes = Json::array(), chars = Json::array();
  for (int c = 0; c < g.num_classes(); ++c) {
    classes.push_back(g.label(g.class_reps()[c]));
    sizes.push_back(g.class_sizes()[c]);
  }
  for (int i = 0; i < ct.size(); ++i) {
    ComplexVector row(ct.size());
    for (int c = 0; c < ct.size(); ++c) row[c] = ct.class_values()(i, c);
    chars.push_back({{"name", "chi_" + std::to_string(i + 1)},
                     {"degree", ct.degrees()[i]},
                     {"values", to_json(row)}});
  }
  Json out = {{"group", g.name()},   {"order", g.order()},       {"classes", classes},
              {"class_sizes", sizes}, {"root_order", ct.root_order()}, {"characters", chars}};
  if (g.exploratory()) out["exploratory"] = true;
  return out;
}

namespace {

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render_character_value(Complex v, int root_order) {
  constexpr double eps = 1e-9;
  const double re = std::round(v.real());
  if (std::abs(v.imag()) < eps && std::abs(v.real() - re) < eps) {
    return std::to_string(static_cast<long long>(re));
  }
  const double mod = std::abs(v);
  const double c = std::round(mod);
  if (root_order > 0 && c >= 1.0 && std::abs(mod - c) < eps) {
    for (int k = 0; k < root_order; ++k) {
      if (std::abs(v - c * root_of_unity(k, root_order)) < eps) {
        const std::string root =
            "e^{2πi·" + std::to_string(k) + "/" + std::to_string(root_order) + "}";
        return c == 1.0 ? root : std::to_string(static_cast<long long>(c)) + "·" + root;
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", v.real(), v.imag());
  return buf;
}

std::string char_table_to_csv(const CharacterTable& ct) {
  const Group& g = ct.group();
  std::ostringstream out;
  out << "character";
  for (int c = 0; c < g.num_classes(); ++c) {
    const std::string label = g.label(g.class_reps()[c]);
    out << ',' << csv_escape(label) << ',' << csv_escape(label + ".re") << ','
        << csv_escape(label + ".im");
  }
  out << '\n';
  for (int i = 0; i < ct.size(); ++i) {
    out << "chi_" << i + 1;
    for (int c = 0; c < ct.size(); ++c) {
      const Complex v = ct.class_values()(i, c);
      out << ',' << render_character_value(v, ct.root_order()) << ',' << format_number(v.real())
          << ',' << format_number(v.imag());
    }
    out << '\n';
  }
  return out.str();
}

Json class_function_to_json(const ClassFunction& f) {
  return {{"group", f.group().name()},
          {"basis", "coefficients"},
          {"data", to_json(f.coefficients())},
          {"values", to_json(f.values())},
          {"sync_residual", f.sync_residual()}};
}

ClassFunction class_function_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("class function JSON must be an object");
  try {
    const std::string label = j.at("group").get<std::string>();
    const std::string basis = j.at("basis").get<std::string>();
    ComplexVector data = complex_vector_from_json(j.at("data"));
    auto ct = std::make_shared<const CharacterTable>(character_table(group_from_label(label)));
    if (basis == "coefficients") {
      if (static_cast<int>(data.size()) != ct->size()) {
        throw InvalidInput("group " + label + " has " + std::to_string(ct->size()) +
                           " characters but the file holds " + std::to_string(data.size()) +
                           " coefficients");
      }
      return ClassFunction::FromCoefficients(std::move(ct), std::move(data));
    }
    if (basis == "pointwise") {
      if (static_cast<int>(data.size()) != ct->order()) {
        throw InvalidInput("group " + label + " has order " + std::to_string(ct->order()) +
                           " but the file holds " + std::to_string(data.size()) + " values");
      }
      return ClassFunction::FromValues(std::move(ct), std::move(data));
    }
    throw InvalidInput("basis must be \"coefficients\" or \"pointwise\", got \"" + basis + "\"");
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed class function JSON: ") + e.what());
  }
}

Json bent_report_to_json(const BentReport& r) {
  Json out = {{"group", r.group},
              {"verdict", to_string(r.verdict)},
              {"max_residual", r.max_residual},
              {"unimodular_deviation", r.unimodular_deviation},
              {"residuals", to_json(r.residuals)},
              {"tol", r.tol}};
  // Right translates only differ in principle on nonabelian groups.
  if (r.residuals != r.right_residuals || r.verdict != r.right_verdict) {
    out["right_residuals"] = to_json(r.right_residuals);
    out["right_max_residual"] = r.right_max_residual;
    out["right_verdict"] = to_string(r.right_verdict);
  }
  return out;
}

Json criterion_to_json(const CriterionOutcome& c) {
  Json violations = Json::array();
  for (const auto& v : c.violations)
    violations.push_back({{"equation", v.equation}, {"residual", v.residual}});
  return {{"name", c.name}, {"satisfied", c.satisfied}, {"violations", violations}, {"tol", c.tol}};
}

Json s3_certificate_to_json(const S3Certificate& c) {
  return {{"magnitudes", c.magnitudes},
          {"cross_term", c.cross_term},
          {"cs_lhs", c.cs_lhs},
          {"cs_rhs", c.cs_rhs},
          {"contradiction", c.contradiction},
          {"cross_coupling", c.cross_coupling},
          {"system_residual", c.system_residual},
          {"magnitude_residual", c.magnitude_residual},
          {"ratio_check", c.ratio_check}};
}

Json search_config_to_json(const SearchConfig& c) {
  return {{"group", c.group},
          {"budget", c.budget},
          {"seed", c.seed},
          {"tol", c.tol},
          {"strategy", to_string(c.strategy)}};
}

Json search_result_to_json(const SearchResult& r) {
  Json out = {{"config", search_config_to_json(r.config)},
              {"best_objective", r.best_objective},
              {"best_coeffs", to_json(r.best_coeffs)},
              {"certified_bent", r.certified_bent},
              {"evaluations", r.evaluations},
              {"histogram", r.histogram}};
  if (r.report) out["report"] = bent_report_to_json(*r.report);
  if (r.exploratory) out["exploratory"] = true;
  return out;
}

}  // namespace bent
