#include "hypertest/density.hpp"

#include <utility>

#include "hypertest/family.hpp"
#include "hypertest/hypergraph.hpp"
#include "hypertest/rational.hpp"

namespace hypertest {

namespace {

void check_shape(u32 k, const std::vector<u32>& a) {
  if (k < 2) fail_invalid("density function: k must be at least 2");
  if (a.size() != (std::size_t)k - 1)
    fail_invalid("density function: a must have k-1 entries");
  for (u32 v : a)
    if (v == 0) fail_invalid("density function: part counts must be positive");
  if (a[0] < k)
    fail_invalid("density function: a1 < k leaves no address to assign");
}

void check_compatible(const DensityFunction& x, const AddressVector& v) {
  if (v.ell != x.k || v.level != x.k - 1)
    fail_invalid("density function: address has the wrong shape");
  if (v.a.size() < x.a.size())
    fail_invalid("density function: address part counts too short");
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (v.a[i] != x.a[i])
      fail_invalid("density function: address part counts disagree");
}

}  // namespace

const mpq_class& DensityFunction::at(const AddressVector& x) const {
  check_compatible(*this, x);
  return values[address_rank(x)];
}

DensityFunction make_density_function(u32 k, std::vector<u32> a,
                                      std::vector<mpq_class> values) {
  check_shape(k, a);
  u64 want = address_space_size(k, k - 1, a);
  if (values.size() != want)
    fail_invalid("density function: expected " + std::to_string(want) +
                 " values, got " + std::to_string(values.size()));
  for (const mpq_class& v : values)
    if (v < 0 || v > 1)
      fail_invalid("density function: values must lie in [0,1]");
  DensityFunction d;
  d.k = k;
  d.a = std::move(a);
  d.values = std::move(values);
  return d;
}

DensityFunction constant_density(u32 k, std::vector<u32> a,
                                 const mpq_class& d) {
  check_shape(k, a);
  u64 count = address_space_size(k, k - 1, a);
  return make_density_function(k, std::move(a),
                               std::vector<mpq_class>(count, d));
}

mpq_class dist(const DensityFunction& d1, const DensityFunction& d2) {
  if (d1.k != d2.k || d1.a != d2.a)
    fail_invalid("dist: density functions have different shapes");
  mpq_class sum = 0;
  for (std::size_t i = 0; i < d1.values.size(); ++i)
    sum += abs(d1.values[i] - d2.values[i]);
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), d1.k);
  mpz_class den = 1;
  for (u32 i = 1; i < d1.k; ++i) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), d1.a[i - 1], binom(d1.k, i));
    den *= p;
  }
  return frac_z(num, den) * sum;
}

DensityFunction measured_densities(const FamilyOfPartitions& fam,
                                   const Hypergraph& h) {
  if (h.n() != fam.n() || h.k() != fam.k())
    fail_invalid("measured_densities: hypergraph does not match the family");
  u32 k = fam.k();
  std::vector<mpq_class> values;
  for (const AddressVector& x : address_space(k, k - 1, fam.a())) {
    Polyad p = polyad(fam, x);
    u64 total = 0, hit = 0;
    for (const auto& c : polyad_cliques(p, k)) {
      ++total;
      if (h.has_edge(c)) ++hit;
    }
    values.push_back(total == 0 ? mpq_class(0) : frac(hit, total));
  }
  return make_density_function(k, fam.a(), std::move(values));
}

}  // namespace hypertest
