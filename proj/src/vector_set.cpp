#include "dirdiam/vector_set.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

#include "dirdiam/edge_list_io.hpp"

namespace dirdiam {

VectorSet::VectorSet(std::size_t n_, std::size_t d_, std::int64_t scale_, std::vector<std::int64_t> values_)
    : n(n_), d(d_), scale(scale_), values(std::move(values_)) {
    if (scale < 1) {
        throw std::invalid_argument("vector scale must be positive");
    }
    if (values.size() != n * d) {
        throw std::invalid_argument("vector value count does not match n*d");
    }
}

VectorSet VectorSet::from_rationals(std::size_t n, std::size_t d, const std::vector<Rational> &coords) {
    if (coords.size() != n * d) {
        throw std::invalid_argument("coordinate count does not match n*d");
    }
    std::int64_t scale = 1;
    for (const Rational &c : coords) {
        scale = std::lcm(scale, c.denominator());
    }
    std::vector<std::int64_t> values;
    values.reserve(coords.size());
    for (const Rational &c : coords) {
        values.push_back(c.numerator() * (scale / c.denominator()));
    }
    return VectorSet(n, d, scale, std::move(values));
}

Rational linf_distance(const VectorSet &vs, std::size_t i, std::size_t j) {
    std::int64_t best = 0;
    for (std::size_t x = 0; x < vs.d; ++x) {
        std::int64_t diff = vs.raw(i, x) - vs.raw(j, x);
        best = std::max(best, diff < 0 ? -diff : diff);
    }
    return Rational(best, vs.scale);
}

VectorSet read_vector_set(std::istream &in) {
    std::vector<std::string> tok;
    if (!detail::next_record(in, tok, nullptr)) {
        throw ParseError("missing vector-set header");
    }
    if (tok.size() != 3) {
        throw ParseError("vector-set header must be 'n d scale'");
    }
    std::size_t n = detail::parse_unsigned(tok[0], "vector count");
    std::size_t d = detail::parse_unsigned(tok[1], "dimension");
    std::int64_t scale = detail::parse_signed(tok[2], "scale");
    if (scale < 1) {
        throw ParseError("scale must be positive");
    }
    std::vector<std::int64_t> values;
    values.reserve(n * d);
    for (std::size_t i = 0; i < n; ++i) {
        if (!detail::next_record(in, tok, nullptr) || tok.size() != d) {
            throw ParseError("expected " + std::to_string(d) + " values on vector row " + std::to_string(i + 1));
        }
        for (const std::string &t : tok) {
            values.push_back(detail::parse_signed(t, "coordinate"));
        }
    }
    if (detail::next_record(in, tok, nullptr)) {
        throw ParseError("trailing data after vector rows");
    }
    return VectorSet(n, d, scale, std::move(values));
}

void write_vector_set(std::ostream &out, const VectorSet &vs) {
    out << vs.n << ' ' << vs.d << ' ' << vs.scale << '\n';
    for (std::size_t i = 0; i < vs.n; ++i) {
        for (std::size_t x = 0; x < vs.d; ++x) {
            out << (x ? " " : "") << vs.raw(i, x);
        }
        out << '\n';
    }
}

} // namespace dirdiam
