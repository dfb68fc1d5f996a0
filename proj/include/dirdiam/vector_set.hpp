#ifndef DIRDIAM_VECTOR_SET_HPP_
#define DIRDIAM_VECTOR_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace dirdiam {

using Rational = boost::rational<std::int64_t>;

/// n fixed-point vectors of dimension d; coordinate (i, x) equals values[i*d + x] / scale.
struct VectorSet {
    std::size_t n = 0;
    std::size_t d = 0;
    std::int64_t scale = 1;
    std::vector<std::int64_t> values;

    VectorSet() = default;
    /// Throws std::invalid_argument if values.size() != n*d or scale < 1.
    VectorSet(std::size_t n, std::size_t d, std::int64_t scale, std::vector<std::int64_t> values);

    std::int64_t raw(std::size_t i, std::size_t x) const { return values[i * d + x]; }
    Rational at(std::size_t i, std::size_t x) const { return Rational(raw(i, x), scale); }

    /// Builds a set from exact rationals, choosing the least common denominator as scale.
    static VectorSet from_rationals(std::size_t n, std::size_t d, const std::vector<Rational> &coords);

    friend bool operator==(const VectorSet &, const VectorSet &) = default;
};

/// ||v_i - v_j||_inf as an exact rational.
Rational linf_distance(const VectorSet &vs, std::size_t i, std::size_t j);

/// Vector file format: header `n d scale`, then n rows of d integers; '#' lines are comments.
VectorSet read_vector_set(std::istream &in);
void write_vector_set(std::ostream &out, const VectorSet &vs);

} // namespace dirdiam

#endif // DIRDIAM_VECTOR_SET_HPP_
