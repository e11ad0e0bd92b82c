#include "ffchow/constants.hpp"

namespace ffchow {

void validate_params(const ScenarioParams& p) {
    if (p.ambient < 1) throw DomainError("ambient dimension must be at least 1");
    if (p.dim < 0 || p.dim > p.ambient) throw DomainError("variety dimension out of range");
    if (p.position < p.dim) throw DomainError("position parameter below the variety dimension");
    if (p.family_size < p.position + 1) throw DomainError("family smaller than the position parameter allows");
    if (p.d < 1) throw DomainError("common degree must be positive");
    if (p.variety_degree < 1) throw DomainError("variety degree must be positive");
    if (p.h_form < 0 || p.h_family < 0) throw DomainError("heights cannot be negative");
    if (p.eps <= 0) throw DomainError("eps must be positive");
    if (p.place_count < 1) throw DomainError("place set must be nonempty");
}

Int tail_constant(const ScenarioParams& p) {
    validate_params(p);
    Int base = Int(6) * std::max({Int(p.position + 1), p.variety_degree, Int(p.d)});
    unsigned long e = static_cast<unsigned long>(p.dim + 1) *
                      (static_cast<unsigned long>(p.ambient) * static_cast<unsigned long>(p.ambient) +
                       static_cast<unsigned long>(p.ambient));
    return pow_int(base, e) * (p.h_form + p.h_family);
}

DerivedConstants derive_constants(const ScenarioParams& p, const ExternalConstants& a) {
    validate_params(p);
    if (a.a < 0 || a.a_prime < 0) throw DomainError("external constants cannot be negative");
    DerivedConstants out;
    out.b = a.a;
    out.b_prime = Rat(p.position - p.dim + 1) * a.a_prime;

    Rat lift_factor = Rat(pow_int(Int(p.d), static_cast<unsigned long>(p.dim) + 1)) +
                      Rat(p.dim + 1) * Rat(p.variety_degree) *
                          Rat(pow_int(Int(p.d), static_cast<unsigned long>(p.dim))) * Rat(p.h_family);
    out.b_tilde = out.b * lift_factor;
    out.b_tilde_prime = out.b_prime * lift_factor;

    Rat inv_d = Rat(1) / Rat(p.d);
    out.height_cutoff = inv_d * out.b_tilde * Rat(p.h_form + 1);

    out.tail = tail_constant(p);
    Rat slope_q = Rat(p.family_size) + Rat((p.position - p.dim + 1) * (p.dim + 1)) + p.eps;
    out.defect_bound = inv_d * out.b_tilde_prime * Rat(p.h_form + 1) + inv_d * slope_q * Rat(p.h_family) +
                       inv_d * Rat(p.family_size - p.position) * Rat(p.place_count) * Rat(out.tail);
    return out;
}

DegreeBound exception_degree_bound(const ScenarioParams& p) {
    validate_params(p);
    Rat exact = Rat(2 * (2 * p.dim + 1)) *
                Rat(pow_int(Int(p.d), static_cast<unsigned long>(p.dim) + 2)) * Rat(p.variety_degree) *
                Rat(binomial(static_cast<unsigned long>(p.d + p.ambient),
                             static_cast<unsigned long>(p.ambient)) +
                    p.family_size + 1) /
                p.eps +
            Rat(p.d);
    return DegreeBound{exact, ceil_rat(exact)};
}

DegreeBound reduction_degree_bound(int dim, const Int& degree, int ambient, const Rat& eps) {
    if (dim < 0 || degree < 1 || ambient < 1) throw DomainError("bad reduction profile");
    if (eps <= 0) throw DomainError("eps must be positive");
    Rat exact = Rat(1) + Rat(2 * (2 * dim + 1)) * Rat(degree) * Rat(ambient + 1) / eps;
    return DegreeBound{exact, ceil_rat(exact)};
}

}  // namespace ffchow
