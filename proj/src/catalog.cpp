#include "morsepres/catalog.hpp"

#include <sstream>

namespace morsepres {

namespace {
void require_params(const CatalogSpec& s, std::size_t n) {
  if (s.params.size() != n)
    throw BadParams(s.family + " takes " + std::to_string(n) + " parameter(s)");
}

std::string num(long v) { return std::to_string(v); }
}  // namespace

Presentation catalog(const CatalogSpec& spec) {
  std::string text;
  if (spec.family == "AK") {
    require_params(spec, 1);
    const long n = spec.params[0];
    if (n < 1) throw BadParams("AK requires n >= 1");
    text = "<x,y | x*y*x*y^-1*x^-1*y^-1, x^" + num(n) + "*y^" + num(-(n + 1)) + ">";
  } else if (spec.family == "MS") {
    require_params(spec, 1);
    const long n = spec.params[0];
    if (n < 1) throw BadParams("MS requires n >= 1");
    // second relator is x w*^-1 with w* = y^-1 x y x^-1
    text = "<x,y | x^-1*y^" + num(n) + "*x*y^" + num(-(n + 1)) + ", x*x*y^-1*x^-1*y>";
  } else if (spec.family == "G") {
    require_params(spec, 4);
    const long n = spec.params[0], m = spec.params[1], p = spec.params[2], q = spec.params[3];
    text = "<x,y | x*[x^" + num(m) + ",y^" + num(n) + "]^-1, y*[y^" + num(p) + ",x^" + num(q) +
           "]^-1>";
  } else if (spec.family == "Gtilde") {
    require_params(spec, 1);
    const long k = spec.params[0];
    if (k < 1) throw BadParams("Gtilde requires k >= 1");
    text = "<x,y | x^-2*y^-1*x*y, y^-1*x^" + num(1 - k) + "*y*x^-1*y^-1>";
  } else if (spec.family == "BarmakB") {
    require_params(spec, 0);
    text = "<x,y | [x,y], 1>";
  } else if (spec.family == "BarmakBprime") {
    require_params(spec, 0);
    text = "<x,y | [x,[x,y^-1]]^2*y*[y^-1,x]*y^-1, [x,[[y^-1,x],x]]>";
  } else {
    throw UnknownFamily("unknown catalog family: " + spec.family);
  }
  Presentation p = parse_presentation(text);
  p.origin = catalog_spec_text(spec);
  return p;
}

Presentation catalog(const std::string& family, const std::vector<long>& params) {
  return catalog({family, params});
}

CatalogSpec parse_catalog_spec(const std::string& text) {
  CatalogSpec spec;
  const auto open = text.find('(');
  if (open == std::string::npos) {
    spec.family = text;
    return spec;
  }
  if (text.back() != ')') throw BadParams("catalog spec must end with ')': " + text);
  spec.family = text.substr(0, open);
  std::string inner = text.substr(open + 1, text.size() - open - 2);
  std::istringstream in(inner);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      spec.params.push_back(std::stol(tok));
    } catch (const std::exception&) {
      throw BadParams("bad catalog parameter '" + tok + "' in " + text);
    }
  }
  return spec;
}

std::string catalog_spec_text(const CatalogSpec& spec) {
  std::string out = spec.family + "(";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ",";
    out += num(spec.params[i]);
  }
  return out + ")";
}

std::vector<std::string> catalog_families() {
  return {"AK", "MS", "G", "Gtilde", "BarmakB", "BarmakBprime"};
}

}  // namespace morsepres
