#pragma once

#include <gmpxx.h>

#include <vector>

#include "hypertest/address.hpp"
#include "hypertest/common.hpp"

namespace hypertest {

class Hypergraph;
class FamilyOfPartitions;

// Density prescription on the top-level address space A(k, k-1, a): one
// rational in [0,1] per address, stored in canonical rank order.
struct DensityFunction {
  u32 k = 2;
  std::vector<u32> a;
  std::vector<mpq_class> values;

  u64 size() const noexcept { return values.size(); }

  // Value at an address of shape (k, k-1) over the same part counts.
  const mpq_class& at(const AddressVector& x) const;

  bool operator==(const DensityFunction& o) const {
    return k == o.k && a == o.a && values == o.values;
  }
};

// Validates the shape: a has k-1 positive entries with a1 >= k (so the
// domain is nonempty), one value per address, every value in [0,1].
DensityFunction make_density_function(u32 k, std::vector<u32> a,
                                      std::vector<mpq_class> values);

// The constant function d on A(k, k-1, a).
DensityFunction constant_density(u32 k, std::vector<u32> a,
                                 const mpq_class& d);

// Weighted l1 distance k! * prod_{i=1}^{k-1} a_i^(-C(k,i)) * sum |d1 - d2|.
// Always at most 1; zero iff the functions agree. Errors on shape mismatch.
mpq_class dist(const DensityFunction& d1, const DensityFunction& d2);

// Densities of H relative to the family's top-level polyads: for each
// address of A(k, k-1, a), the fraction of spanned k-sets lying in H,
// with 0 where the polyad spans none.
DensityFunction measured_densities(const FamilyOfPartitions& fam,
                                   const Hypergraph& h);

}  // namespace hypertest
