#include "amicable/generators.hpp"

#include "amicable/divisors.hpp"
#include "amicable/error.hpp"

namespace amicable {

namespace {

Nat power(const Nat& base, unsigned long e) {
    Nat out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

struct PrimeGate {
    bool prime = false;
    bool probable = false;
};

PrimeGate gate(const Nat& v) {
    const Primality p = primality(v);
    return {p != Primality::Composite, p == Primality::ProbablePrime};
}

} // namespace

bool verify_pair_by_sigma(const Nat& m, const Nat& n) {
    if (m == 0 || n == 0) {
        throw Error(ErrorCode::BadParameter, "pair members must be nonzero");
    }
    if (m == n) {
        throw Error(ErrorCode::BadParameter, "pair members must differ");
    }
    const Nat total = m + n;
    return sigma(m) == total && sigma(n) == total;
}

ThabitCandidate thabit_candidate(unsigned k) {
    if (k < 1) {
        throw Error(ErrorCode::BadParameter, "thabit k must be >= 1");
    }
    ThabitCandidate c;
    c.k = k;
    c.p = monus(3 * pow2(k), 1);
    c.q = monus(3 * pow2(k + 1), 1);
    c.r = monus(9 * pow2(2 * k + 1), 1);

    const PrimeGate gp = gate(c.p);
    const PrimeGate gq = gate(c.q);
    const PrimeGate gr = gate(c.r);
    c.p_prime = gp.prime;
    c.q_prime = gq.prime;
    c.r_prime = gr.prime;
    c.probable = gp.probable || gq.probable || gr.probable;

    if (c.p_prime && c.q_prime && c.r_prime) {
        const Nat scale = pow2(k + 1);
        c.pair = NatPair{scale * c.p * c.q, scale * c.r};
        c.verified = verify_pair_by_sigma(c.pair->m, c.pair->n);
    }
    return c;
}

EulerCandidate euler_candidate(unsigned m, unsigned n) {
    if (m < 1 || m >= n) {
        throw Error(ErrorCode::BadParameter, "euler rule needs 1 <= m < n");
    }
    EulerCandidate c;
    c.m = m;
    c.n = n;
    c.a = pow2(n - m) + 1;
    c.p = monus(pow2(m) * c.a, 1);
    c.q = monus(pow2(n) * c.a, 1);
    c.r = monus(pow2(n + m) * c.a * c.a, 1);

    const PrimeGate gp = gate(c.p);
    const PrimeGate gq = gate(c.q);
    const PrimeGate gr = gate(c.r);
    c.p_prime = gp.prime;
    c.q_prime = gq.prime;
    c.r_prime = gr.prime;
    c.probable = gp.probable || gq.probable || gr.probable;

    if (c.p_prime && c.q_prime && c.r_prime) {
        const Nat scale = pow2(n);
        c.pair = NatPair{scale * c.p * c.q, scale * c.r};
        c.verified = verify_pair_by_sigma(c.pair->m, c.pair->n);
    }
    return c;
}

BorhoCandidate borho_candidate(const Nat& a, const Nat& u, unsigned n) {
    if (a < 1 || u < 1 || n < 1) {
        throw Error(ErrorCode::BadParameter, "borho parameters a, u, n must be >= 1");
    }
    BorhoCandidate c;
    c.a = a;
    c.u = u;
    c.n = n;
    c.t = sigma(u);
    if (c.t < u) {
        throw Error(ErrorCode::DegenerateSubtraction, "sigma(u) < u");
    }
    const Nat tn = power(c.t, n);
    const Nat p1_plus_1 = tn * (u + 1);
    const Nat p2_plus_1 = p1_plus_1 * (c.t - u);
    c.p1 = monus(p1_plus_1, 1);
    c.p2 = monus(p2_plus_1, 1);
    c.degenerate_subtraction = p2_plus_1 == 0;
    c.M = a * u * tn * c.p1;
    c.N = a * tn * c.p2;

    BorhoHypothesis& h = c.hypothesis;
    const Nat au = a * u;
    h.breeder_amicable = check_amicable(au, a).kind == PairKind::Amicable;
    const PrimeGate gt = gate(c.t);
    const PrimeGate g1 = gate(c.p1);
    h.t_prime = gt.prime;
    h.p1_prime = g1.prime;
    h.coprime_au_t = gcd(au, c.t) == 1;
    h.coprime_au_p1 = gcd(au, c.p1) == 1;
    c.probable = gt.probable || g1.probable;
    if (!c.degenerate_subtraction) {
        const PrimeGate g2 = gate(c.p2);
        h.p2_prime = g2.prime;
        h.coprime_a_p2 = gcd(a, c.p2) == 1;
        c.probable = c.probable || g2.probable;
    }

    if (h.holds()) {
        c.pair = NatPair{c.M, c.N};
        c.verified = c.M != c.N && verify_pair_by_sigma(c.M, c.N);
    }
    return c;
}

bool thabit_identity_check(unsigned k) {
    if (k < 1) {
        throw Error(ErrorCode::BadParameter, "thabit k must be >= 1");
    }
    const Nat p = monus(3 * pow2(k), 1);
    const Nat q = monus(3 * pow2(k + 1), 1);
    const Nat r = monus(9 * pow2(2 * k + 1), 1);
    return (p + 1) * (q + 1) == r + 1;
}

bool euler_identity_check(unsigned m, unsigned n) {
    if (m < 1 || m >= n) {
        throw Error(ErrorCode::BadParameter, "euler rule needs 1 <= m < n");
    }
    const Nat a = pow2(n - m) + 1;
    const Nat p = monus(pow2(m) * a, 1);
    const Nat q = monus(pow2(n) * a, 1);
    const Nat r = monus(pow2(n + m) * a * a, 1);
    return (p + 1) * (q + 1) == r + 1;
}

bool borho_structure_check(const Nat& a, const Nat& u, unsigned n) {
    const BorhoCandidate c = borho_candidate(a, u, n);

    const Nat t = sigma_brute(u);
    Nat tn = 1;
    for (unsigned i = 0; i < n; ++i) {
        tn *= t;
    }
    const Nat diff = t - u;
    bool ok = c.t == t;
    ok = ok && c.p1 + 1 == tn * (u + 1);
    // When t = u the product (p1+1)(t-u) is zero and p2 truncates to zero.
    if (diff == 0) {
        ok = ok && c.p2 == 0 && c.degenerate_subtraction;
    } else {
        ok = ok && c.p2 + 1 == (c.p1 + 1) * diff;
    }
    ok = ok && c.M == a * u * tn * c.p1;
    ok = ok && c.N == a * tn * c.p2;
    return ok;
}

} // namespace amicable
