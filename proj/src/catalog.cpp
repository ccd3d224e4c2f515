// SPDX-License-Identifier: Apache-2.0

#include "minsurf/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

const Complex kI(0.0, 1.0);

Polynomial poly(std::initializer_list<Complex> coeffs) { return Polynomial(coeffs); }

Rational rat(std::initializer_list<Complex> num) {
  return Rational(Polynomial(num), Polynomial::constant(Complex(1.0)));
}

DiskDomain unit_disk() { return DiskDomain{Complex(0.0, 0.0), 1.0}; }

// f = ((1 - z^{2k})/2, i (1 + z^{2k})/2, z^k).
std::vector<Rational> enneper_forms(int k) {
  std::vector<Complex> low(static_cast<std::size_t>(2 * k) + 1, Complex(0.0));
  std::vector<Complex> high(low);
  std::vector<Complex> mid(static_cast<std::size_t>(k) + 1, Complex(0.0));
  low[0] = Complex(0.5);
  low[static_cast<std::size_t>(2 * k)] = Complex(-0.5);
  high[0] = kI * 0.5;
  high[static_cast<std::size_t>(2 * k)] = kI * 0.5;
  mid[static_cast<std::size_t>(k)] = Complex(1.0);
  return {Rational(Polynomial(low), Polynomial::constant(Complex(1.0))),
          Rational(Polynomial(high), Polynomial::constant(Complex(1.0))),
          Rational(Polynomial(mid), Polynomial::constant(Complex(1.0)))};
}

// Covector of the hyperplane met by the Gauss map exactly where the
// classical map g takes the value w: (w^2 - 1, -i (1 + w^2), -2 w).
Hyperplane plane_for_value(Complex w) {
  return Hyperplane{{w * w - Complex(1.0), -kI * (Complex(1.0) + w * w), -2.0 * w}};
}

// Value infinity of the classical map.
Hyperplane plane_for_infinity() { return Hyperplane{{Complex(1.0), -kI, Complex(0.0)}}; }

CatalogEntry make_plane() {
  std::vector<Rational> forms = {rat({Complex(1.0)}), rat({kI}), Rational()};
  return CatalogEntry{"plane", WeierstrassData(std::move(forms), unit_disk()),
                      HyperplaneSet{3, {}},
                      "flat plane; constant Gauss map, zero curvature"};
}

CatalogEntry make_enneper(int k) {
  if (k < 1 || k > 5) throw ConfigError("enneper_k order must lie in 1..5");
  std::ostringstream name;
  if (k == 1)
    name << "enneper";
  else
    name << "enneper_k(" << k << ")";
  return CatalogEntry{name.str(), WeierstrassData(enneper_forms(k), unit_disk()),
                      HyperplaneSet{3, {}},
                      k == 1 ? "Enneper surface on the unit disk"
                             : "higher-order Enneper surface on the unit disk"};
}

CatalogEntry make_voss(const std::vector<Complex>& poles, const std::string& name) {
  if (poles.empty() || poles.size() > 4)
    throw ConfigError("voss takes 1 to 4 pole locations");
  for (Complex a : poles)
    if (std::abs(a) < 1.5)
      throw ConfigError("voss poles must stay at distance >= 1.5 from the domain center");

  Polynomial den = Polynomial::constant(Complex(1.0));
  for (Complex a : poles) den = den * poly({-a, Complex(1.0)});

  // Classical data f = 1/den, g = z mapped to
  // (f (1 - g^2)/2, i f (1 + g^2)/2, f g).
  std::vector<Rational> forms = {
      Rational(poly({Complex(0.5), Complex(0.0), Complex(-0.5)}), den),
      Rational(poly({kI * 0.5, Complex(0.0), kI * 0.5}), den),
      Rational(poly({Complex(0.0), Complex(1.0)}), den)};

  HyperplaneSet omitted;
  omitted.m = 3;
  for (Complex a : poles) omitted.planes.push_back(plane_for_value(a));
  omitted.planes.push_back(plane_for_infinity());

  return CatalogEntry{name, WeierstrassData(std::move(forms), unit_disk()),
                      std::move(omitted),
                      "Voss surface; the Gauss map omits the planes of the "
                      "classical values at the poles and at infinity"};
}

CatalogEntry make_iso4(double theta, const std::string& name) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<Rational> forms = {
      rat({Complex(0.5), Complex(0.0), Complex(-0.5)}),
      rat({kI * 0.5, Complex(0.0), kI * 0.5}),
      rat({Complex(0.0), Complex(c)}),
      rat({Complex(0.0), Complex(s)})};
  return CatalogEntry{name, WeierstrassData(std::move(forms), unit_disk()),
                      HyperplaneSet{4, {}},
                      "Enneper-type surface in R^4 with the last form split "
                      "by a rotation angle"};
}

// Splits "name(arg1,arg2,...)" into the bare name and argument strings.
bool split_call(const std::string& text, std::string& head,
                std::vector<std::string>& args) {
  const std::size_t open = text.find('(');
  if (open == std::string::npos) {
    head = text;
    return true;
  }
  if (text.back() != ')') return false;
  head = text.substr(0, open);
  std::string body = text.substr(open + 1, text.size() - open - 2);
  std::string current;
  for (char ch : body) {
    if (ch == ',') {
      args.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      current.push_back(ch);
    }
  }
  if (!current.empty()) args.push_back(current);
  return true;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t.empty()) throw ConfigError("empty complex literal");

  if (t.back() != 'i' && t.back() != 'I') {
    char* end = nullptr;
    const double re = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
      throw ConfigError("malformed complex literal: " + text);
    return Complex(re, 0.0);
  }

  t.pop_back();  // trailing i
  if (t.empty()) return Complex(0.0, 1.0);
  if (t == "+") return Complex(0.0, 1.0);
  if (t == "-") return Complex(0.0, -1.0);

  // Find the sign separating real and imaginary parts, skipping exponent
  // signs and the leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    char* end = nullptr;
    const double im = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
      throw ConfigError("malformed complex literal: " + text);
    return Complex(0.0, im);
  }

  const std::string re_part = t.substr(0, split);
  std::string im_part = t.substr(split);
  if (im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  char* end = nullptr;
  const double re = std::strtod(re_part.c_str(), &end);
  if (end != re_part.c_str() + re_part.size())
    throw ConfigError("malformed complex literal: " + text);
  const double im = std::strtod(im_part.c_str(), &end);
  if (end != im_part.c_str() + im_part.size())
    throw ConfigError("malformed complex literal: " + text);
  return Complex(re, im);
}

CatalogEntry builtin(const std::string& name) {
  std::string head;
  std::vector<std::string> args;
  if (!split_call(name, head, args)) throw UnknownEntry("malformed catalog name: " + name);

  if (head == "plane") {
    if (!args.empty()) throw ConfigError("plane takes no arguments");
    return make_plane();
  }
  if (head == "enneper") {
    if (!args.empty()) throw ConfigError("enneper takes no arguments");
    return make_enneper(1);
  }
  if (head == "enneper_k") {
    if (args.size() != 1) throw ConfigError("enneper_k takes one integer argument");
    return make_enneper(static_cast<int>(std::strtol(args[0].c_str(), nullptr, 10)));
  }
  if (head == "voss") {
    std::vector<Complex> poles;
    for (const std::string& a : args) poles.push_back(parse_complex(a));
    return make_voss(poles, name);
  }
  if (head == "iso4") {
    if (args.size() != 1) throw ConfigError("iso4 takes one angle argument");
    char* end = nullptr;
    const double theta = std::strtod(args[0].c_str(), &end);
    if (end != args[0].c_str() + args[0].size())
      throw ConfigError("malformed iso4 angle: " + args[0]);
    return make_iso4(theta, name);
  }
  throw UnknownEntry("unknown catalog entry: " + name);
}

std::vector<std::pair<std::string, std::string>> catalog_listing() {
  return {
      {"plane", "flat plane, m=3; zero curvature, constant Gauss map"},
      {"enneper", "Enneper surface, m=3, unit disk"},
      {"enneper_k(k)", "higher-order Enneper surface, k in 1..5"},
      {"voss(a1,...,aj)", "Voss surface with up to 4 poles at distance >= 1.5"},
      {"iso4(theta)", "Enneper-type surface in R^4, rotation angle theta"},
  };
}

}  // namespace minsurf
