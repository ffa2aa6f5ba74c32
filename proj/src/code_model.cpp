#include "twozero/code_model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twozero {

namespace {

std::vector<BigInt> divisors_big(const BigInt& n, std::size_t cap = 1 << 16) {
    std::vector<BigInt> divs{1};
    for (const auto& pp : factorize(n)) {
        std::size_t sz = divs.size();
        BigInt pe = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            pe *= pp.prime;
            for (std::size_t i = 0; i < sz; ++i) {
                divs.push_back(divs[i] * pe);
                if (divs.size() > cap) throw std::runtime_error("divisors_big: too many divisors");
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

const CodeParams& require_index2(const CodeParams& p) {
    if (!p.index2_valid)
        throw std::invalid_argument("closed-form machinery needs index-2-valid parameters");
    return p;
}

}  // namespace

CodeParams validate(std::uint64_t p, unsigned f, unsigned k, std::uint64_t h, std::uint64_t e) {
    if (!is_prime_u64(p)) throw std::invalid_argument("validate: p is not prime");
    if (f == 0 || k == 0 || h == 0 || e == 0)
        throw std::invalid_argument("validate: all parameters must be positive");
    CodeParams prm;
    prm.p = p;
    prm.f = f;
    prm.k = k;
    prm.h = h;
    prm.e = e;
    mpz_ui_pow_ui(prm.q.get_mpz_t(), static_cast<unsigned long>(p), f);
    mpz_pow_ui(prm.qk.get_mpz_t(), prm.q.get_mpz_t(), k);
    if (h % e != 0) throw std::invalid_argument("validate: e does not divide h");
    if ((prm.q - 1) % BigInt(static_cast<unsigned long>(h)) != 0)
        throw std::invalid_argument("validate: h does not divide q-1");

    BigInt unit_index = (prm.qk - 1) / (prm.q - 1);
    prm.n = BigInt(static_cast<unsigned long>(h)) * unit_index;
    BigInt second = BigInt(static_cast<unsigned long>(e)) * (prm.q - 1) / static_cast<unsigned long>(h);
    mpz_gcd(prm.m.get_mpz_t(), unit_index.get_mpz_t(), second.get_mpz_t());

    prm.index2_valid = false;
    if (e == 2 && prm.m > 3 && prm.m % 4 == 3 && prm.m.fits_ulong_p() && is_prime(prm.m)) {
        std::uint64_t p1 = prm.m.get_ui();
        std::uint64_t half = (p1 - 1) / 2;
        std::uint64_t fk = static_cast<std::uint64_t>(f) * k;
        if (p % p1 != 0 && fk % half == 0 && mult_order_u64(p % p1, p1) == half) {
            prm.index2_valid = true;
            prm.p1 = p1;
            prm.s = static_cast<unsigned>(fk / half);
            prm.class_no = class_number(p1);
            // Derived necessary conditions; failures would mean broken logic.
            if ((prm.q - 1) % BigInt(static_cast<unsigned long>(p1)) != 0)
                throw std::logic_error("validate: index-2 parameters but p1 does not divide q-1");
            if (k % p1 != 0)
                throw std::logic_error("validate: index-2 parameters but p1 does not divide k");
        }
    }
    return prm;
}

std::vector<CodeParams> search_params(std::uint64_t max_p, unsigned max_fk, std::uint64_t max_p1,
                                      bool include_invalid) {
    std::vector<CodeParams> out;
    for (std::uint64_t p = 2; p <= max_p; ++p) {
        if (!is_prime_u64(p)) continue;
        for (unsigned f = 1; f <= max_fk; ++f) {
            BigInt q = pow_big(BigInt(static_cast<unsigned long>(p)), f);
            std::vector<BigInt> divs;
            try {
                divs = divisors_big(q - 1);
            } catch (const std::runtime_error&) {
                continue;  // divisor explosion; outside any sensible search window
            }
            for (unsigned k = 1; f * k <= max_fk; ++k) {
                for (const BigInt& hd : divs) {
                    if (hd % 2 != 0 || !hd.fits_ulong_p()) continue;
                    CodeParams prm = validate(p, f, k, hd.get_ui(), 2);
                    if (prm.index2_valid) {
                        if (prm.p1 <= max_p1) out.push_back(prm);
                    } else if (include_invalid) {
                        out.push_back(prm);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CodeParams& a, const CodeParams& b) {
        return std::tie(a.p, a.f, a.k, a.h) < std::tie(b.p, b.f, b.k, b.h);
    });
    return out;
}

std::string TupleClass::label() const {
    return "(" + std::to_string(e0) + "," + std::to_string(n0) + "," + std::to_string(n1) + "," +
           std::to_string(n2) + ")";
}

const std::vector<TupleClass>& all_tuple_classes() {
    static const std::vector<TupleClass> classes = {
        {2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}, {1, 1, 0, 0},
        {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
    return classes;
}

CodeContext::CodeContext(const CodeParams& params, unsigned generator_rank)
    : prm_(params), tower_(params.p, params.f, params.k, generator_rank) {
    const FieldCtx& B = tower_.big();
    g_ = B.pow(B.generator(), (prm_.q - 1) / static_cast<unsigned long>(prm_.h));
    beta_ = B.pow(B.generator(), (prm_.qk - 1) / static_cast<unsigned long>(prm_.e));
}

std::vector<FieldElem> CodeContext::codeword(const FieldElem& a, const FieldElem& b,
                                             std::uint64_t max_n) const {
    if (prm_.n > BigInt(static_cast<unsigned long>(max_n)))
        throw std::runtime_error("codeword: length beyond enumeration bound");
    const FieldCtx& B = tower_.big();
    const std::uint64_t n = prm_.n.get_ui();
    FieldElem bg = B.mul(beta_, g_);
    FieldElem gi = B.one(), bgi = B.one();
    std::vector<FieldElem> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        out.push_back(tower_.trace(B.add(B.mul(a, gi), B.mul(b, bgi))));
        gi = B.mul(gi, g_);
        bgi = B.mul(bgi, bg);
    }
    return out;
}

std::uint64_t CodeContext::codeword_weight(const FieldElem& a, const FieldElem& b,
                                           std::uint64_t max_n) const {
    const FieldCtx& S = tower_.subfield();
    std::uint64_t w = 0;
    for (const FieldElem& coord : codeword(a, b, max_n))
        if (!S.is_zero(coord)) ++w;
    return w;
}

BigInt CodeContext::z_direct(const FieldElem& a, const FieldElem& b, std::uint64_t max_n) const {
    if (prm_.n > BigInt(static_cast<unsigned long>(max_n)))
        throw std::runtime_error("z_direct: length beyond enumeration bound");
    const FieldCtx& B = tower_.big();
    const std::uint64_t n = prm_.n.get_ui();
    const std::uint64_t e = prm_.e;
    std::vector<FieldElem> coeff(e);
    std::vector<bool> coeff_zero(e);
    FieldElem bp = B.one();
    for (std::uint64_t r = 0; r < e; ++r) {
        coeff[r] = B.add(a, B.mul(bp, b));
        coeff_zero[r] = B.is_zero(coeff[r]);
        bp = B.mul(bp, beta_);
    }
    std::uint64_t count = 0;
    FieldElem gi = B.one(), x, tmp;
    std::vector<std::uint64_t> scratch;
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t r = i % e;
        if (coeff_zero[r]) {
            ++count;
        } else {
            B.mul_to(coeff[r], gi, x, scratch);
            if (tower_.trace_is_zero(x)) ++count;
        }
        B.mul_to(gi, g_, tmp, scratch);
        gi.swap(tmp);
    }
    return BigInt(static_cast<unsigned long>(count));
}

BigInt CodeContext::z_charsum_brute(const FieldElem& a, const FieldElem& b,
                                    std::uint64_t max_enum) const {
    const FieldCtx& B = tower_.big();
    if (!prm_.m.fits_ulong_p()) throw std::runtime_error("z_charsum: m too large");
    const std::uint64_t mm = prm_.m.get_ui();
    BigInt coset_size_big = (prm_.qk - 1) / prm_.m;
    if (BigInt(static_cast<unsigned long>(prm_.e)) * coset_size_big >
        BigInt(static_cast<unsigned long>(max_enum)))
        throw std::runtime_error("z_charsum: enumeration beyond bound");
    const std::uint64_t coset_size = coset_size_big.get_ui();
    const unsigned p = static_cast<unsigned>(prm_.p);

    const std::uint64_t base_shift = BigInt((prm_.q - 1) / static_cast<unsigned long>(prm_.h) %
                                            BigInt(static_cast<unsigned long>(mm)))
                                         .get_ui();
    FieldElem step = B.pow(B.generator(), BigInt(static_cast<unsigned long>(mm)));
    CyclotomicInt total(p);
    FieldElem bp = B.one();
    for (std::uint64_t i = 0; i < prm_.e; ++i) {
        FieldElem ci = B.add(a, B.mul(bp, b));
        bp = B.mul(bp, beta_);
        if (B.is_zero(ci)) {
            total = total + CyclotomicInt::integer(p, coset_size_big);
            continue;
        }
        const std::uint64_t r = (base_shift * (i % mm)) % mm;
        FieldElem x = B.pow(B.generator(), BigInt(static_cast<unsigned long>(r)));
        std::vector<long long> counts(p, 0);
        FieldElem y, tmp;
        std::vector<std::uint64_t> scratch;
        for (std::uint64_t j = 0; j < coset_size; ++j) {
            B.mul_to(ci, x, y, scratch);
            counts[B.abs_trace(y)] += 1;
            B.mul_to(x, step, tmp, scratch);
            x.swap(tmp);
        }
        total = total + CyclotomicInt::from_root_counts(p, counts);
    }
    if (!total.is_rational())
        throw std::logic_error("z_charsum: character sums did not collapse to a rational value");

    BigRat z(prm_.h * (prm_.qk - 1));
    z /= BigRat(prm_.q * (prm_.q - 1));
    BigRat second(prm_.h * prm_.m * total.rational_value());
    second /= BigRat(prm_.e * prm_.q);
    z += second;
    z.canonicalize();
    if (z.get_den() != 1 || z < 0)
        throw std::logic_error("z_charsum: formula value is not a nonnegative integer");
    return z.get_num();
}

WeightDistribution CodeContext::brute_weight_distribution(std::uint64_t max_pairs) const {
    const FieldCtx& B = tower_.big();
    if (prm_.qk * prm_.qk > BigInt(static_cast<unsigned long>(max_pairs)))
        throw std::runtime_error("brute_weight_distribution: pair space beyond bound");
    const std::uint64_t P = prm_.qk.get_ui();
    const std::uint64_t e = prm_.e;
    const BigInt big_M = BigInt(static_cast<unsigned long>(e)) * (prm_.q - 1) /
                         static_cast<unsigned long>(prm_.h);
    const std::uint64_t M = big_M.get_ui();
    const std::uint64_t n = prm_.n.get_ui();
    const std::uint64_t n_over_e = n / e;
    const std::uint64_t base_shift =
        BigInt((prm_.q - 1) / static_cast<unsigned long>(prm_.h) % BigInt(M)).get_ui();

    // One pass over F^*: log mod M per element and trace-zero counts per coset.
    std::vector<std::int32_t> logM(P, -1);
    std::vector<std::uint64_t> count0(M, 0);
    {
        FieldElem x = B.one(), tmp;
        std::vector<std::uint64_t> scratch;
        for (std::uint64_t t = 0; t + 1 < P; ++t) {
            const std::uint64_t r = t % M;
            logM[B.pack(x)] = static_cast<std::int32_t>(r);
            if (tower_.trace_is_zero(x)) count0[r] += 1;
            B.mul_to(x, B.generator(), tmp, scratch);
            x.swap(tmp);
        }
    }
    auto z_part = [&](std::uint64_t packed, std::uint64_t r) -> std::uint64_t {
        if (packed == 0) return n_over_e;
        const std::uint64_t shift = (base_shift * r) % M;
        return count0[(static_cast<std::uint64_t>(logM[packed]) + shift) % M];
    };

    std::map<std::uint64_t, std::uint64_t> hist;
    if (e == 2) {
        // (a, b) -> (a+b, a-b) is a bijection of F^2 (q odd here), so the
        // histogram is the convolution of the two per-coordinate Z histograms.
        std::map<std::uint64_t, std::uint64_t> h0, h1;
        FieldElem c;
        c.clear();
        while (B.next_element(c)) {
            std::uint64_t packed = B.pack(c);
            h0[z_part(packed, 0)] += 1;
            h1[z_part(packed, 1)] += 1;
        }
        for (const auto& [v0, c0] : h0)
            for (const auto& [v1, c1] : h1) hist[n - v0 - v1] += c0 * c1;
    } else {
        std::vector<FieldElem> beta_pow(e);
        beta_pow[0] = B.one();
        for (std::uint64_t r = 1; r < e; ++r) beta_pow[r] = B.mul(beta_pow[r - 1], beta_);
        FieldElem b;
        b.clear();
        std::vector<FieldElem> bb(e);
        while (B.next_element(b)) {
            for (std::uint64_t r = 0; r < e; ++r) bb[r] = B.mul(beta_pow[r], b);
            FieldElem a;
            a.clear();
            while (B.next_element(a)) {
                std::uint64_t z = 0;
                for (std::uint64_t r = 0; r < e; ++r) z += z_part(B.pack(B.add(a, bb[r])), r);
                hist[n - z] += 1;
            }
        }
    }

    WeightDistribution dist;
    dist.n = prm_.n;
    dist.dimension = 2 * prm_.k;
    for (const auto& [w, c] : hist)
        dist.entries.emplace_back(BigInt(static_cast<unsigned long>(w)),
                                  BigInt(static_cast<unsigned long>(c)));
    return dist;
}

FieldElem CodeContext::random_element(gmp_randclass& rng) const {
    BigInt u = rng.get_z_range(prm_.qk);
    if (u == 0) return tower_.big().zero();
    return tower_.big().pow(tower_.big().generator(), u - 1);
}

BigInt y_from_z(const CodeParams& params, const BigInt& z) {
    BigRat y(params.e * params.q);
    y /= BigRat(params.h);
    BigRat inner(z);
    BigRat base(params.h * (params.qk - 1));
    base /= BigRat(params.q * (params.q - 1));
    inner -= base;
    y *= inner;
    y += 2;
    y.canonicalize();
    if (y.get_den() != 1) throw std::logic_error("y_from_z: non-integral Y");
    return y.get_num();
}

BigInt z_from_y(const CodeParams& params, const BigInt& y) {
    BigRat z(params.h * (y - 2));
    z /= BigRat(params.e * params.q);
    BigRat base(params.h * (params.qk - 1));
    base /= BigRat(params.q * (params.q - 1));
    z += base;
    z.canonicalize();
    if (z.get_den() != 1) throw std::logic_error("z_from_y: non-integral Z");
    return z.get_num();
}

BigInt weight_from_y(const CodeParams& params, const BigInt& y) {
    BigInt w = params.n - z_from_y(params, y);
    if (w < 0 || w > params.n) throw std::logic_error("weight_from_y: weight out of range");
    return w;
}

ClosedContext::ClosedContext(const CodeParams& params, unsigned generator_rank,
                             std::uint64_t calib_bound)
    : prm_(require_index2(params)),
      tower_(params.p, static_cast<unsigned>((params.p1 - 1) / 2), params.s, generator_rank),
      coset_(tower_.big(), params.p1),
      b_sign_(calibrate_b_sign(tower_, params.p1, calib_bound)),
      lifted_(lifted_index2(params.p, params.p1, params.s, b_sign_)),
      g_plus_(to_cyclotomic(lifted_, static_cast<unsigned>(params.p1))),
      g_minus_(g_plus_.conj()) {
    std::uint64_t j = 1;
    for (std::uint64_t i = 0; i < (prm_.p1 - 1) / 2; ++i) {
        subgroup_.push_back(static_cast<std::uint32_t>(j));
        j = (j * (prm_.p % prm_.p1)) % prm_.p1;
    }
    if (j != 1) throw std::logic_error("ClosedContext: <p> has unexpected order");
}

TupleClass ClosedContext::classify(const FieldElem& a, const FieldElem& b) const {
    const FieldCtx& B = tower_.big();
    TupleClass t;
    for (int i = 0; i < 2; ++i) {
        FieldElem c = (i == 0) ? B.add(a, b) : B.sub(a, b);
        if (B.is_zero(c)) {
            t.e0++;
            continue;
        }
        std::uint64_t l = coset_.index(c);
        if (l == 0)
            t.n2++;
        else if (legendre_symbol(BigInt(static_cast<unsigned long>(l)),
                                 BigInt(static_cast<unsigned long>(prm_.p1))) == 1)
            t.n0++;
        else
            t.n1++;
    }
    return t;
}

std::pair<FieldElem, FieldElem> ClosedContext::construct_representative(const TupleClass& target) const {
    const FieldCtx& B = tower_.big();
    const std::uint64_t p1 = prm_.p1;
    if (target.e0 + target.n0 + target.n1 + target.n2 != 2)
        throw std::invalid_argument("construct_representative: malformed tuple class");
    if (target == TupleClass{2, 0, 0, 0}) return {B.zero(), B.zero()};

    std::uint64_t jqnr = 2;
    while (legendre_symbol(BigInt(static_cast<unsigned long>(jqnr)),
                           BigInt(static_cast<unsigned long>(p1))) != -1)
        ++jqnr;
    // Exponent whose coset index lands in the requested residue class; the
    // variant offsets by p1 to get a second distinct element of the class.
    enum Cls { QR, QNR, ZERO };
    auto exponent_for = [&](Cls c, std::uint64_t variant) -> std::uint64_t {
        switch (c) {
            case QR: return 1 + variant * p1;
            case QNR: return jqnr + variant * p1;
            default: return p1 + variant * p1;
        }
    };
    FieldElem inv2 = B.inv(B.from_int(2));
    std::pair<FieldElem, FieldElem> result;
    if (target.e0 == 1) {
        Cls c = target.n0 ? QR : (target.n1 ? QNR : ZERO);
        FieldElem x = B.pow_u64(B.generator(), exponent_for(c, 0));
        FieldElem a = B.mul(x, inv2);  // a + b = 2a = x, a - b = 0
        result = {a, a};
    } else {
        std::vector<Cls> wanted;
        for (unsigned i = 0; i < target.n0; ++i) wanted.push_back(QR);
        for (unsigned i = 0; i < target.n1; ++i) wanted.push_back(QNR);
        for (unsigned i = 0; i < target.n2; ++i) wanted.push_back(ZERO);
        FieldElem x = B.pow_u64(B.generator(), exponent_for(wanted[0], 0));
        FieldElem y = B.pow_u64(B.generator(), exponent_for(wanted[1], 1));
        result = {B.mul(B.add(x, y), inv2), B.mul(B.sub(x, y), inv2)};
    }
    if (!(classify(result.first, result.second) == target))
        throw std::logic_error("construct_representative: classification mismatch");
    return result;
}

BigInt ClosedContext::y_value_closed(const FieldElem& a, const FieldElem& b) const {
    const FieldCtx& B = tower_.big();
    const unsigned p1 = static_cast<unsigned>(prm_.p1);
    CyclotomicInt acc(p1);
    unsigned e0 = 0;
    for (int i = 0; i < 2; ++i) {
        FieldElem c = (i == 0) ? B.add(a, b) : B.sub(a, b);
        if (B.is_zero(c)) {
            ++e0;
            continue;
        }
        const std::uint64_t l = coset_.index(c);
        std::vector<long long> cp(p1, 0), cm(p1, 0);
        for (std::uint32_t j : subgroup_) {
            const std::uint64_t jl = (static_cast<std::uint64_t>(j) * l) % p1;
            cp[(p1 - jl) % p1] += 1;  // chi^{-j}(c) against G(chi)
            cm[jl] += 1;              // chi^{+j}(c) against conj(G(chi))
        }
        acc = acc + g_plus_ * CyclotomicInt::from_root_counts(p1, cp) +
              g_minus_ * CyclotomicInt::from_root_counts(p1, cm);
    }
    acc = acc + CyclotomicInt::integer(p1, BigInt(e0) * prm_.qk);
    if (!acc.is_rational())
        throw std::logic_error("y_value: cyclotomic expression did not collapse to an integer");
    return acc.rational_value();
}

BigInt ClosedContext::z_closed(const FieldElem& a, const FieldElem& b) const {
    return z_from_y(prm_, y_value_closed(a, b));
}

FieldElem ClosedContext::random_element(gmp_randclass& rng) const {
    BigInt u = rng.get_z_range(prm_.qk);
    if (u == 0) return tower_.big().zero();
    return tower_.big().pow(tower_.big().generator(), u - 1);
}

}  // namespace twozero
