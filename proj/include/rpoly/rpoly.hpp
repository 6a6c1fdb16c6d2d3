#pragma once

#include <memory>
#include <string_view>

#include "rpoly/affine.hpp"
#include "rpoly/cartan.hpp"
#include "rpoly/errors.hpp"
#include "rpoly/finite_r.hpp"
#include "rpoly/io.hpp"
#include "rpoly/laurent.hpp"
#include "rpoly/periodic.hpp"
#include "rpoly/reflection_order.hpp"
#include "rpoly/root_system.hpp"
#include "rpoly/weyl_group.hpp"

namespace rpoly {

/// Finite and affine Weyl groups of one Cartan type, built together.
struct Setup {
  std::shared_ptr<const WeylGroup> group;
  std::shared_ptr<const AffineWeylGroup> affine;
};

inline Setup make_setup(const CartanDatum& datum) {
  auto group = std::make_shared<const WeylGroup>(RootSystem(datum));
  auto affine = std::make_shared<const AffineWeylGroup>(group);
  return {group, affine};
}

/// e.g. "A2", "G2".
inline Setup make_setup(std::string_view type) { return make_setup(CartanDatum::parse(type)); }

}  // namespace rpoly
