#include "codelat/special.hpp"

#include <stdexcept>

namespace codelat {

namespace {

RatMatrix mul(const RatMatrix& a, const RatMatrix& b)
{
    RatMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

// Image of alpha_l in block b of one group, in the group's ambient coordinates.
std::vector<Rational> group_image(const BridgeTable& t, int b, int l)
{
    const int p = t.p;
    std::vector<Rational> v(static_cast<std::size_t>(p) * t.group, 0);
    const auto& blocks = t.image.at(b).at(l - 1);
    for (int tb = 0; tb < t.group; ++tb) {
        int total = 0;
        for (int j = 0; j < p; ++j) total += blocks[tb][j];
        for (int j = 0; j < p; ++j) v[tb * p + j] = Rational(blocks[tb][j]) - Rational(total, p);
    }
    return v;
}

RatMatrix group_matrix(const BridgeTable& t)
{
    const int p = t.p, g = t.group;
    const std::size_t n = static_cast<std::size_t>(p) * g;
    RatMatrix x(n, n), y(n, n);
    std::size_t row = 0;
    for (int b = 0; b < g; ++b)
        for (int l = 1; l < p; ++l, ++row) {
            RatVec a = embed_block(an_alpha(p, l), p, g, b);
            auto img = group_image(t, b, l);
            for (std::size_t j = 0; j < n; ++j) {
                x(row, j) = a.num[j];
                y(row, j) = img[j];
            }
        }
    for (int b = 0; b < g; ++b, ++row)
        for (int j = 0; j < p; ++j) x(row, b * p + j) = y(row, b * p + j) = 1;
    return mul(inverse(x), y);
}

// Coefficient rows in the order alpha_1^1, ..., alpha_{p-1}^g, where the row
// of alpha_1 in the last block is p times its image and every other row is
// the difference with that image.
IntMatrix coefficient_rows(const BridgeTable& t)
{
    const int p = t.p, g = t.group;
    const auto pivot = group_image(t, g - 1, 1);
    IntMatrix out(0, static_cast<std::size_t>(g) * (p - 1));
    for (int b = 0; b < g; ++b)
        for (int l = 1; l < p; ++l) {
            auto v = group_image(t, b, l);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = (b == g - 1 && l == 1) ? Rational(pivot[j] * p) : Rational(v[j] - pivot[j]);
            IntVec row;
            for (int tb = 0; tb < g; ++tb) {
                IntVec block(p);
                for (int j = 0; j < p; ++j) {
                    const Rational& q = v[tb * p + j];
                    if (denominator(q) != 1) throw std::logic_error("bridge: coefficient row is not in the root lattice");
                    block[j] = narrow(BigInt(numerator(q)));
                }
                Int sum = 0;
                for (Int x : block) sum += x;
                if (sum != 0) throw std::logic_error("bridge: coefficient row leaves the sum-zero space");
                IntVec co = alpha_coordinates(block);
                row.insert(row.end(), co.begin(), co.end());
            }
            out.append_row(row);
        }
    return out;
}

BridgeCertificate certify(int p, int m, const Lattice& source, const Lattice& target)
{
    const BridgeTable& t = bridge_table(p);
    BridgeCertificate c;
    c.p = p;
    c.m = m;
    c.coefficients = coefficient_rows(t);
    c.echelon = hnf(c.coefficients);
    c.coefficients_match = c.coefficients == t.coefficients;
    c.echelon_match = c.echelon == t.echelon;
    BridgeMap bm = bridge_map(p, m);
    c.orthogonal = is_orthogonal(bm.matrix);
    c.image = transform(source, bm.matrix);
    c.target = target;
    c.equal = c.image == c.target;
    return c;
}

}  // namespace

bool is_orthogonal(const RatMatrix& m)
{
    if (m.rows() != m.cols()) return false;
    return mul(m, m.transpose()) == RatMatrix::identity(m.rows());
}

BridgeMap bridge_map(int p, int m)
{
    if (m < 1) throw std::invalid_argument("bridge_map: m must be positive");
    const BridgeTable& t = bridge_table(p);
    const RatMatrix g = group_matrix(t);
    const std::size_t n = g.rows();
    BridgeMap out;
    out.p = p;
    out.m = m;
    out.matrix = RatMatrix(n * m, n * m);
    for (int s = 0; s < m; ++s)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.matrix(s * n + i, s * n + j) = g(i, j);
    if (!is_orthogonal(out.matrix)) throw std::logic_error("bridge_map: table does not preserve the inner product");
    return out;
}

BridgeCertificate verify_bridge3(const K3Code& k)
{
    if (!is_self_orthogonal(k.code)) throw std::invalid_argument("verify_bridge3: K is not self-orthogonal");
    return certify(3, k.m, construction_A(code_construction_B3(k)), construction_B(code_construction_A3(k)));
}

BridgeCertificate verify_bridge5(int m)
{
    return certify(5, m, construction_A(d5_zero_code(m)), construction_B(d5_code(m)));
}

}  // namespace codelat
