#pragma once

#include "cquad/core/json_io.hpp"
#include "cquad/core/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace cquad {

/// Weakly decreasing list of positive parts (trailing zeros are dropped).
using Partition = std::vector<unsigned>;

/// Integer combination of Schubert classes on G(k,n), the Grassmannian of
/// projective k-planes in P^n. Partitions fit the (k+1) x (n-k) box.
class SchubertClass {
public:
    SchubertClass(unsigned k, unsigned n);

    /// sigma_lambda with the given coefficient; throws std::invalid_argument if
    /// lambda is not a partition or does not fit the box.
    static SchubertClass sigma(unsigned k, unsigned n, Partition lambda, const BigInt& coeff = 1);

    unsigned k() const { return k_; }
    unsigned n() const { return n_; }
    unsigned rows() const { return k_ + 1; }
    unsigned cols() const { return n_ - k_; }
    unsigned dimension() const { return rows() * cols(); }

    const std::map<Partition, BigInt>& terms() const { return terms_; }
    BigInt coeff(const Partition& lambda) const;
    bool is_zero() const { return terms_.empty(); }
    bool fits(const Partition& lambda) const;

    void add(const Partition& lambda, const BigInt& c);

    SchubertClass& operator+=(const SchubertClass& o);
    friend SchubertClass operator+(SchubertClass a, const SchubertClass& b) { return a += b; }
    friend SchubertClass operator*(const BigInt& c, const SchubertClass& a);
    friend bool operator==(const SchubertClass&, const SchubertClass&) = default;

    std::string to_string() const;  ///< e.g. "sigma(2) + sigma(1,1)"

private:
    unsigned k_, n_;
    std::map<Partition, BigInt> terms_;
};

unsigned weight(const Partition& lambda);
std::string partition_string(const Partition& lambda);  ///< comma list, "" for the empty partition

/// Multiplication by sigma_1 (Pieri): add one box in every way that stays in the box.
SchubertClass pieri1(const SchubertClass& c);

/// Complement of lambda in the (k+1) x (n-k) box.
Partition complement(unsigned k, unsigned n, const Partition& lambda);

/// Poincare pairing of classes of complementary codimension. Throws
/// std::invalid_argument if some pair of terms is not of complementary degree.
BigInt duality_pair(const SchubertClass& a, const SchubertClass& b);

/// Coefficient of the point class in sigma_1^m, m = dim G(k,n): the degree of
/// G(k,n) in its Plucker embedding.
BigInt sigma1_power_degree(unsigned k, unsigned n, unsigned m);

/// 2 <sigma_2 + sigma_{1,1}, sigma_1^2> on G(1,3); without the cover factor
/// the bare pairing is returned.
BigInt p_dot_r2(bool with_cover_factor = true);

/// Evaluates an integer combination of products such as
/// "2*sigma2*sigma1^2 + sigma(1,1)". A partition is written sigma<digits>
/// (one part per digit), sigma(a,b,...) or sigma{a,b,...}. Each product may
/// contain any number of sigma1 factors and at most one other class.
/// Throws std::invalid_argument on malformed input.
SchubertClass evaluate_schubert(unsigned k, unsigned n, const std::string& expr);

Json to_json(const SchubertClass& c);

} // namespace cquad
