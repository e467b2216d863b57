#pragma once

#include <string>
#include <vector>

#include "morsepres/presentation.hpp"

namespace morsepres {

struct CatalogSpec {
  std::string family;
  std::vector<long> params;
  friend bool operator==(const CatalogSpec&, const CatalogSpec&) = default;
};

// Families:
//   AK(n)        <x,y | xyx(yxy)^-1, x^n y^-(n+1)>            n >= 1
//   MS(n)        <x,y | x^-1 y^n x y^-(n+1), x w*^-1>         n >= 1, w* = y^-1 x y x^-1
//   G(n,m,p,q)   <x,y | x [x^m,y^n]^-1, y [y^p,x^q]^-1>
//   Gtilde(k)    <x,y | x^-2 y^-1 x y, y^-1 x^(1-k) y x^-1 y^-1>   k >= 1
//   BarmakB      <x,y | [x,y], 1>
//   BarmakBprime <x,y | [x,[x,y^-1]]^2 y [y^-1,x] y^-1, [x,[[y^-1,x],x]]>
Presentation catalog(const std::string& family, const std::vector<long>& params);
Presentation catalog(const CatalogSpec& spec);

// "AK(2)", "G(-1,-1,-1,-2)", "BarmakBprime" (empty parens optional)
CatalogSpec parse_catalog_spec(const std::string& text);
std::string catalog_spec_text(const CatalogSpec& spec);
std::vector<std::string> catalog_families();

}  // namespace morsepres
