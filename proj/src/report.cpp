#include <cstdio>
#include <set>
#include <stdexcept>

#include "dilute1d/io.hpp"

namespace dilute1d::io {

namespace {

void dump_value(const nlohmann::ordered_json& j, std::string& out, int indent,
                int depth) {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string pad_close(static_cast<std::size_t>(indent) * depth, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += nlohmann::json(it.key()).dump();
        out += ": ";
        dump_value(it.value(), out, indent, depth + 1);
      }
      out += "\n" + pad_close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        dump_value(el, out, indent, depth + 1);
      }
      out += "\n" + pad_close + "]";
      return;
    }
    case nlohmann::json::value_t::number_float: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

void reject_unknown(const nlohmann::json& j,
                    const std::set<std::string>& allowed, const char* where) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument(std::string("unknown field \"") + it.key() +
                                  "\" in " + where);
}

std::vector<scatter::Atom> atoms_from_json(const nlohmann::json& j) {
  std::vector<scatter::Atom> atoms;
  for (const auto& a : j) {
    reject_unknown(a, {"x", "weight"}, "atom");
    atoms.push_back({a.at("x").get<double>(), a.at("weight").get<double>()});
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const auto& a, const auto& b) { return a.x < b.x; });
  return atoms;
}

scatter::TabulatedDensity density_from_json(const nlohmann::json& j) {
  reject_unknown(j, {"xs", "vals"}, "density");
  scatter::TabulatedDensity d;
  d.xs = j.at("xs").get<std::vector<double>>();
  d.vals = j.at("vals").get<std::vector<double>>();
  return d;
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
  std::string out;
  dump_value(j, out, indent, 0);
  out += "\n";
  return out;
}

scatter::ScalarPotential scalar_potential_from_json(const nlohmann::json& j) {
  reject_unknown(j, {"schema", "R0", "atoms", "density", "hard_core"},
                 "potential");
  if (j.value("schema", kSchema) != kSchema)
    throw std::invalid_argument("unsupported schema version");
  scatter::ScalarPotential v;
  v.support_radius = j.at("R0").get<double>();
  if (j.contains("atoms")) v.atoms = atoms_from_json(j.at("atoms"));
  if (j.contains("density")) v.density = density_from_json(j.at("density"));
  v.hard_core = j.value("hard_core", false);
  v.validate();
  return v;
}

scatter::MatrixPotential matrix_potential_from_json(const nlohmann::json& j) {
  reject_unknown(j, {"schema", "R0", "atoms", "density", "dim", "matrix_part",
                     "hard_core"},
                 "potential");
  if (j.value("schema", kSchema) != kSchema)
    throw std::invalid_argument("unsupported schema version");
  const int dim = j.at("dim").get<int>();

  scatter::ScalarPotential v;
  v.support_radius = j.at("R0").get<double>();
  if (j.contains("atoms")) v.atoms = atoms_from_json(j.at("atoms"));
  if (j.contains("density")) v.density = density_from_json(j.at("density"));
  v.hard_core = j.value("hard_core", false);

  scatter::MatrixPotential m = scatter::MatrixPotential::from_scalar(v, dim);
  if (j.contains("matrix_part")) {
    // per-entry increments keyed "i,j"; Hermitian completion is the
    // caller's responsibility in the document
    for (auto it = j.at("matrix_part").begin(); it != j.at("matrix_part").end();
         ++it) {
      int row = -1, col = -1;
      if (std::sscanf(it.key().c_str(), "%d,%d", &row, &col) != 2 || row < 0 ||
          col < 0 || row >= dim || col >= dim)
        throw std::invalid_argument("matrix_part key must be \"i,j\"");
      reject_unknown(*it, {"atoms", "density"}, "matrix_part entry");
      if (it->contains("atoms")) {
        for (const auto& atom : atoms_from_json(it->at("atoms"))) {
          auto found = std::find_if(
              m.atoms.begin(), m.atoms.end(),
              [&](const auto& a) { return std::abs(a.x - atom.x) < 1e-15; });
          if (found == m.atoms.end()) {
            m.atoms.push_back(
                {atom.x, Eigen::MatrixXd::Zero(dim, dim)});
            found = std::prev(m.atoms.end());
          }
          found->weight(row, col) += atom.weight;
        }
      }
      if (it->contains("density"))
        throw std::invalid_argument(
            "matrix_part density increments are not supported yet");
    }
    std::sort(m.atoms.begin(), m.atoms.end(),
              [](const auto& a, const auto& b) { return a.x < b.x; });
  }
  m.validate();
  return m;
}

nlohmann::ordered_json scalar_result_to_json(
    const scatter::ScatteringScalarResult& r) {
  nlohmann::ordered_json out;
  out["schema"] = kSchema;
  out["parity"] = r.parity == scatter::Parity::Even ? "even" : "odd";
  out["R"] = r.r;
  if (r.a_infinite)
    out["a"] = "-inf";
  else
    out["a"] = r.a;
  out["energy"] = r.energy;
  out["slope_at_R"] = r.slope_at_r;
  out["tail_affine_residual"] = r.tail_affine_residual;
  return out;
}

}  // namespace dilute1d::io
