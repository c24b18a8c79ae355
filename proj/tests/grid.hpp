// Exhaustive descriptor grid: every kind, discrete parameters in [lo, hi].
#pragma once

#include <vector>

#include "bimodulus/bimodules.hpp"

namespace testgrid {

using namespace bimodulus;

inline std::vector<BimodDescriptor> descriptors(int lo, int hi, const std::vector<int>& chis) {
  std::vector<BimodDescriptor> all;
  const bool flags[3][2] = {{false, false}, {true, false}, {false, true}};
  for (int a = lo; a <= hi; ++a)
    for (int b = a; b <= hi; ++b) all.push_back(Type11Desc{a, b});
  for (int k = lo; k <= hi; ++k)
    for (int dD = 0; dD <= hi; ++dD)
      for (auto& f : flags) all.push_back(NonReducedDesc{k, f[0], f[1], dD});
  for (auto t : {KodairaType::I0, KodairaType::I1, KodairaType::II})
    for (int deg = lo; deg <= hi; ++deg)
      for (auto& f : flags)
        if (deg % 2 == 0 || (!f[0] && !f[1])) all.push_back(IntegralInvertibleDesc{t, deg, f[0], f[1]});
  for (auto t : {KodairaType::I1, KodairaType::II})
    for (int i = lo; i <= hi; ++i) all.push_back(IntegralNonInvertibleDesc{t, i});
  for (auto t : {KodairaType::I2, KodairaType::III})
    for (int p = lo; p <= hi; ++p)
      for (int q = p; q <= hi; ++q) {
        for (auto& f : flags)
          if (p == q || (!f[0] && !f[1])) all.push_back(ReducibleInvertibleDesc{t, p, q, f[0], f[1]});
        for (auto r : {Resolution::NodalConic, Resolution::TwoLines}) all.push_back(ReducibleNonInvertibleDesc{t, r, p, q});
      }
  std::vector<BimodDescriptor> out;
  for (auto& d : all) {
    validate_descriptor(d);
    for (int c : chis)
      if (chi(d) == c) out.push_back(d);
  }
  return out;
}

}  // namespace testgrid
