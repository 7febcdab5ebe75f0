#include "mopoly/polynomial.hpp"

namespace mopoly {

double max_relative_difference(const Polynomial<Extended>& p, const Polynomial<Extended>& q, double floor) {
    const int deg = std::max(p.degree(), q.degree());
    Extended scale(0);
    for (int k = 0; k <= q.degree(); ++k) scale = std::max(scale, abs_value(q.coeff(k)));
    Extended worst(0);
    for (int k = 0; k <= deg; ++k) {
        const Extended diff = abs_value(Extended(p.coeff(k) - q.coeff(k)));
        Extended ref = std::max(abs_value(q.coeff(k)), Extended(scale * floor));
        if (ref == 0) ref = 1;
        worst = std::max(worst, Extended(diff / ref));
    }
    return to_double(worst);
}

double max_abs_difference(const Polynomial<Extended>& p, const Polynomial<Extended>& q) {
    const int deg = std::max(p.degree(), q.degree());
    Extended worst(0);
    for (int k = 0; k <= deg; ++k) worst = std::max(worst, abs_value(Extended(p.coeff(k) - q.coeff(k))));
    return to_double(worst);
}

ScalarKind kind_of(const AnyPolynomial& p) {
    return std::visit([]<class T>(const Polynomial<T>&) { return scalar_kind_of<T>(); }, p);
}

namespace {

template <class Op>
AnyPolynomial combine(const AnyPolynomial& p, const AnyPolynomial& q, Op op) {
    if (p.index() != q.index())
        raise(ErrorCode::ScalarKindMismatch, std::string("cannot combine ") + std::string(to_string(kind_of(p))) +
                                                 " and " + std::string(to_string(kind_of(q))) + " polynomials");
    return std::visit(
        [&]<class T>(const Polynomial<T>& a) -> AnyPolynomial { return op(a, std::get<Polynomial<T>>(q)); }, p);
}

}  // namespace

AnyPolynomial add(const AnyPolynomial& p, const AnyPolynomial& q) {
    return combine(p, q, [](const auto& a, const auto& b) { return add(a, b); });
}

AnyPolynomial mul(const AnyPolynomial& p, const AnyPolynomial& q) {
    return combine(p, q, [](const auto& a, const auto& b) { return mul(a, b); });
}

}  // namespace mopoly
