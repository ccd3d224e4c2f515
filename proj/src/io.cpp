// SPDX-License-Identifier: Apache-2.0

#include "minsurf/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "minsurf/catalog.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/version.hpp"

namespace minsurf {

using nlohmann::json;

std::string fmt17(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("malformed JSON input");
  return j;
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw ConfigError(std::string("expected a number for ") + what);
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(std::string("non-finite value for ") + what);
  return v;
}

Complex parse_pair(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ConfigError("complex values are [re, im] pairs");
  return Complex(finite_number(j[0], "re"), finite_number(j[1], "im"));
}

Polynomial parse_polynomial(const json& j) {
  if (!j.is_array()) throw ConfigError("polynomials are arrays of [re, im] pairs");
  if (j.size() > static_cast<std::size_t>(kMaxInputDegree) + 1)
    throw ConfigError("polynomial degree exceeds the accepted maximum of 32");
  std::vector<Complex> coeffs;
  coeffs.reserve(j.size());
  for (const json& c : j) coeffs.push_back(parse_pair(c));
  return Polynomial(std::move(coeffs));
}

Rational parse_rational(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw ConfigError("rationals are {\"num\": [...], \"den\": [...]}");
  Polynomial den = parse_polynomial(j["den"]);
  if (den.is_zero()) throw ConfigError("rational with zero denominator");
  return Rational(parse_polynomial(j["num"]), std::move(den));
}

DiskDomain parse_domain(const json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("radius"))
    throw ConfigError("domains are {\"center\": [re, im], \"radius\": r}");
  DiskDomain d;
  d.center = parse_pair(j["center"]);
  d.radius = finite_number(j["radius"], "radius");
  if (!(d.radius > 0.0)) throw ConfigError("domain radius must be positive");
  return d;
}

WeierstrassData parse_weierstrass_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("forms") || !j.contains("domain"))
    throw ConfigError("surface data needs \"m\", \"forms\" and \"domain\"");
  if (!j["m"].is_number_integer()) throw ConfigError("\"m\" must be an integer");
  const auto m = j["m"].get<long>();
  if (m < 3) throw ConfigError("surface data needs m >= 3");
  if (!j["forms"].is_array() || j["forms"].size() != static_cast<std::size_t>(m))
    throw ConfigError("\"forms\" must list exactly m rationals");
  std::vector<Rational> forms;
  forms.reserve(static_cast<std::size_t>(m));
  for (const json& f : j["forms"]) forms.push_back(parse_rational(f));
  return WeierstrassData(std::move(forms), parse_domain(j["domain"]));
}

json pair_json(Complex z) { return json::array({z.real(), z.imag()}); }

json polynomial_json(const Polynomial& p) {
  json a = json::array();
  for (Complex c : p.coeffs()) a.push_back(pair_json(c));
  return a;
}

json rational_json(const Rational& r) {
  return json{{"num", polynomial_json(r.num())}, {"den", polynomial_json(r.den())}};
}

json weierstrass_json(const WeierstrassData& data) {
  json forms = json::array();
  for (const Rational& f : data.forms()) forms.push_back(rational_json(f));
  return json{{"m", data.m()},
              {"forms", forms},
              {"domain",
               {{"center", pair_json(data.domain().center)},
                {"radius", data.domain().radius}}}};
}

HyperplaneSet parse_hyperplanes_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("planes"))
    throw ConfigError("hyperplane sets need \"m\" and \"planes\"");
  HyperplaneSet set;
  set.m = j["m"].get<std::size_t>();
  if (set.m < 2) throw ConfigError("hyperplane ambient dimension must be >= 2");
  if (!j["planes"].is_array() || j["planes"].empty())
    throw ConfigError("\"planes\" must be a non-empty array");
  for (const json& p : j["planes"]) {
    if (!p.is_array() || p.size() != set.m)
      throw ConfigError("each plane lists exactly m [re, im] covector entries");
    Hyperplane h;
    for (const json& c : p) h.covector.push_back(parse_pair(c));
    bool all_zero = true;
    for (Complex c : h.covector)
      if (c != Complex(0.0)) all_zero = false;
    if (all_zero) throw ConfigError("zero covector in hyperplane set");
    set.planes.push_back(std::move(h));
  }
  return set;
}

}  // namespace

WeierstrassData parse_weierstrass(const std::string& json_text) {
  return parse_weierstrass_json(parse_json(json_text));
}

HyperplaneSet parse_hyperplanes(const std::string& json_text) {
  return parse_hyperplanes_json(parse_json(json_text));
}

ExperimentConfig parse_experiment_config(const std::string& json_text) {
  const json j = parse_json(json_text);
  if (!j.is_object()) throw ConfigError("experiment config must be a JSON object");
  for (const char* key : {"surfaces", "hyperplanes", "grid_n", "omission_threshold", "output"})
    if (!j.contains(key)) throw ConfigError(std::string("config is missing \"") + key + "\"");

  ExperimentConfig config;
  config.grid_n = j["grid_n"].get<int>();
  config.quad_order = j.value("quad_order", 12);
  config.omission_threshold = finite_number(j["omission_threshold"], "omission_threshold");
  config.output = j["output"].get<std::string>();
  config.hyperplanes = parse_hyperplanes_json(j["hyperplanes"]);

  if (!j["surfaces"].is_array()) throw ConfigError("\"surfaces\" must be an array");
  std::size_t index = 0;
  for (const json& s : j["surfaces"]) {
    if (s.is_string()) {
      CatalogEntry entry = builtin(s.get<std::string>());
      config.surfaces.push_back({entry.name, std::move(entry.data)});
    } else if (s.is_object() && s.contains("catalog")) {
      CatalogEntry entry = builtin(s["catalog"].get<std::string>());
      std::string name = entry.name;
      WeierstrassData data = std::move(entry.data);
      if (s.contains("radius")) {
        const double r = finite_number(s["radius"], "radius");
        if (!(r > 0.0)) throw ConfigError("surface radius override must be positive");
        DiskDomain d = data.domain();
        d.radius = r;
        data = WeierstrassData(data.forms(), d);
        name += "@r" + fmt17(r);
      }
      config.surfaces.push_back({std::move(name), std::move(data)});
    } else if (s.is_object()) {
      std::string name = s.value("name", "inline_" + std::to_string(index));
      config.surfaces.push_back({std::move(name), parse_weierstrass_json(s)});
    } else {
      throw ConfigError("surface entries are catalog names or data objects");
    }
    ++index;
  }
  return config;
}

std::string weierstrass_to_json(const WeierstrassData& data) {
  return weierstrass_json(data).dump(2) + "\n";
}

std::string validation_to_json(const ValidationReport& report) {
  json zeros = json::array();
  for (Complex z : report.common_zeros) zeros.push_back(pair_json(z));
  json poles = json::array();
  for (const auto& [idx, z] : report.poles)
    poles.push_back(json{{"form", idx}, {"at", pair_json(z)}});
  json j{{"valid", report.valid()},
         {"isotropy_ok", report.isotropy_ok},
         {"common_zeros_in_domain", zeros},
         {"poles_in_domain", poles},
         {"periods", "vacuous (simply connected domain)"}};
  return j.dump(2) + "\n";
}

void write_surface_csv(const WeierstrassData& data, int n, int quad_order,
                       std::ostream& out) {
  const GridMetric metric = sample_metric(data, n);
  out << "u,v";
  for (std::size_t i = 1; i <= data.m(); ++i) out << ",x_" << i;
  out << ",lambda,K\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!metric.mask[metric.index(i, j)]) continue;
      const Complex z = metric.cell_center(i, j);
      const std::vector<double> x = immersion_point(data, z, quad_order);
      out << fmt17(z.real()) << ',' << fmt17(z.imag());
      for (double xi : x) out << ',' << fmt17(xi);
      out << ',' << fmt17(metric.lambda[metric.index(i, j)]) << ','
          << fmt17(curvature(data, z)) << '\n';
    }
}

void write_distance_csv(const GridMetric& metric, const DistanceField& field,
                        double truncation_r, std::ostream& out) {
  out << "u,v,rho,rho_hyperbolic,slack\n";
  for (int i = 0; i < metric.n; ++i)
    for (int j = 0; j < metric.n; ++j) {
      const std::size_t k = metric.index(i, j);
      if (!metric.mask[k] || !field.reached[k]) continue;
      const Complex z = metric.cell_center(i, j);
      const double zr =
          std::abs(z - metric.domain.center) / metric.domain.radius;
      const double scaled = truncation_r * zr;
      const double rho_hat =
          scaled < 1.0 ? std::log((1.0 + scaled) / (1.0 - scaled))
                       : std::numeric_limits<double>::infinity();
      out << fmt17(z.real()) << ',' << fmt17(z.imag()) << ','
          << fmt17(field.dist[k]) << ',' << fmt17(rho_hat) << ','
          << fmt17(field.dist[k] - rho_hat) << '\n';
    }
}

void write_omission_csv(const std::vector<PlaneMargin>& margins, std::ostream& out) {
  out << "plane_index,min_margin,argmin_u,argmin_v\n";
  for (const PlaneMargin& pm : margins)
    out << pm.plane_index << ',' << fmt17(pm.min_margin) << ','
        << fmt17(pm.argmin_u) << ',' << fmt17(pm.argmin_v) << '\n';
}

void write_metric_csv(const GridMetric& metric, std::ostream& out) {
  json header{{"domain",
               {{"center", pair_json(metric.domain.center)},
                {"radius", metric.domain.radius}}},
              {"n", metric.n}};
  out << header.dump() << '\n';
  for (int i = 0; i < metric.n; ++i) {
    for (int j = 0; j < metric.n; ++j) {
      if (j) out << ',';
      out << fmt17(metric.lambda[metric.index(i, j)]);
    }
    out << '\n';
  }
}

GridMetric read_metric_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty metric file");
  const json header = parse_json(line);
  if (!header.contains("domain") || !header.contains("n"))
    throw ConfigError("metric header needs \"domain\" and \"n\"");

  GridMetric metric;
  metric.domain = parse_domain(header["domain"]);
  metric.n = header["n"].get<int>();
  if (metric.n < 3) throw ConfigError("metric grid too small");
  metric.lambda.assign(static_cast<std::size_t>(metric.n) * metric.n, 0.0);
  metric.mask.assign(metric.lambda.size(), 0);

  for (int i = 0; i < metric.n; ++i) {
    if (!std::getline(in, line)) throw IoError("metric file truncated");
    std::istringstream row(line);
    std::string cell;
    for (int j = 0; j < metric.n; ++j) {
      if (!std::getline(row, cell, ',')) throw IoError("metric row truncated");
      const double v = std::strtod(cell.c_str(), nullptr);
      if (!std::isfinite(v) || v < 0.0)
        throw ConfigError("metric values must be finite and nonnegative");
      const std::size_t k = metric.index(i, j);
      metric.lambda[k] = v;
      metric.mask[k] = v > 0.0 ? 1 : 0;
    }
  }
  return metric;
}

namespace {

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  out += '"';
  return out;
}

json config_echo(const ExperimentConfig& config) {
  json surfaces = json::array();
  for (const NamedSurface& s : config.surfaces) {
    json entry = weierstrass_json(s.data);
    entry["name"] = s.name;
    surfaces.push_back(entry);
  }
  json planes = json::array();
  for (const Hyperplane& h : config.hyperplanes.planes) {
    json p = json::array();
    for (Complex c : h.covector) p.push_back(pair_json(c));
    planes.push_back(p);
  }
  return json{{"surfaces", surfaces},
              {"hyperplanes", {{"m", config.hyperplanes.m}, {"planes", planes}}},
              {"grid_n", config.grid_n},
              {"quad_order", config.quad_order},
              {"omission_threshold", config.omission_threshold},
              {"output", config.output}};
}

}  // namespace

void write_report_csv(const ExperimentReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << "name,q_omitted,omission_ok,sup_product,argmax_u,argmax_v,min_margin,kappa_used\n";
  for (const SurfaceRow& row : report.rows) {
    out << csv_quote(row.name) << ',' << row.q_omitted << ','
        << (row.omission_ok ? 1 : 0) << ',' << fmt17(row.sup_product) << ','
        << fmt17(row.argmax_z.real()) << ',' << fmt17(row.argmax_z.imag()) << ','
        << fmt17(row.min_margin) << ',' << fmt17(row.kappa_used) << '\n';
  }
}

void write_report_json(const ExperimentReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);

  // Hand-rolled writer: fixed key order and 17-digit floats keep repeated
  // runs byte-identical.
  out << "{\n";
  out << "  \"tool\": \"" << kToolName << ' ' << kVersion << "\",\n";
  out << "  \"empirical_C\": " << fmt17(report.empirical_C) << ",\n";
  out << "  \"kappa_used\": " << fmt17(kCurvatureNormalization) << ",\n";
  out << "  \"resolutions\": [";
  for (std::size_t i = 0; i < report.resolutions.size(); ++i)
    out << (i ? ", " : "") << report.resolutions[i];
  out << "],\n";
  out << "  \"stability\": " << fmt17(report.stability) << ",\n";
  out << "  \"note\": \"empirical_C is a sampled lower-bound witness for the "
         "family constant, not a bound on it\",\n";
  out << "  \"warnings\": [";
  for (std::size_t i = 0; i < report.warnings.size(); ++i) {
    out << (i ? ", " : "") << json(report.warnings[i]).dump();
  }
  out << "],\n";
  out << "  \"rows\": [";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const SurfaceRow& row = report.rows[i];
    out << (i ? ",\n    " : "\n    ");
    out << "{\"name\": " << json(row.name).dump()
        << ", \"q_omitted\": " << row.q_omitted
        << ", \"omission_ok\": " << (row.omission_ok ? "true" : "false")
        << ", \"sup_product\": " << fmt17(row.sup_product)
        << ", \"argmax_z\": [" << fmt17(row.argmax_z.real()) << ", "
        << fmt17(row.argmax_z.imag()) << "]"
        << ", \"min_margin\": " << fmt17(row.min_margin)
        << ", \"kappa_used\": " << fmt17(row.kappa_used) << "}";
  }
  out << (report.rows.empty() ? "]" : "\n  ]") << ",\n";
  out << "  \"config\": " << config_echo(report.config).dump() << "\n";
  out << "}\n";
}

}  // namespace minsurf
