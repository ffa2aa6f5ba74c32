#include "twozero/characters.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace twozero {

namespace {

void check_gauss_pre(const FieldCtx& F, std::uint64_t N, std::uint64_t enum_bound) {
    if (N == 0) throw std::invalid_argument("gauss: character order must be positive");
    if (F.group_order() % BigInt(static_cast<unsigned long>(N)) != 0)
        throw std::invalid_argument("gauss: N does not divide q-1");
    if (F.order() > BigInt(static_cast<unsigned long>(enum_bound)))
        throw std::runtime_error("gauss: field too large for brute-force enumeration");
}

// counts[u][v] = #{t in [0, q-2] : t = u (mod N), Tr(alpha^t) = v}
std::vector<std::vector<long long>> character_counts(const FieldCtx& F, std::uint64_t N) {
    const std::uint64_t p = F.characteristic();
    std::vector<std::vector<long long>> cnt(N, std::vector<long long>(p, 0));
    const std::uint64_t units = F.group_order().get_ui();
    if (F.degree() == 1) {
        const std::uint64_t a = F.generator()[0];
        std::uint64_t x = 1;
        for (std::uint64_t t = 0; t < units; ++t) {
            cnt[t % N][x] += 1;
            x = mul_mod_u64(x, a, p);
        }
    } else {
        FieldElem x = F.one(), tmp;
        std::vector<std::uint64_t> scratch;
        for (std::uint64_t t = 0; t < units; ++t) {
            cnt[t % N][F.abs_trace(x)] += 1;
            F.mul_to(x, F.generator(), tmp, scratch);
            x.swap(tmp);
        }
    }
    return cnt;
}

}  // namespace

namespace {

// Gauss value for character index j from the (t mod N, trace) count matrix.
// Values of order-1 and order-2 characters live in Q(zeta_p) already, so they
// are folded to conductor p (zeta_2 = -1); otherwise the conductor is pN.
CyclotomicInt gauss_from_counts(std::uint64_t p, std::uint64_t N, std::uint64_t j,
                                const std::vector<std::vector<long long>>& cnt) {
    const std::uint64_t jmod = j % N;
    if (N <= 2 || jmod == 0 || (N % 2 == 0 && jmod == N / 2)) {
        std::vector<long long> red(p, 0);
        for (std::uint64_t u = 0; u < N; ++u) {
            const long long sign = ((jmod * u) % N) ? -1 : 1;  // zeta_2 exponent
            for (std::uint64_t v = 0; v < p; ++v) red[v] += sign * cnt[u][v];
        }
        return CyclotomicInt::from_root_counts(static_cast<unsigned>(p), red);
    }
    const unsigned m = static_cast<unsigned>(p * N);
    std::vector<long long> red(m, 0);
    const std::uint64_t mN = m / N, mp = m / p;
    for (std::uint64_t u = 0; u < N; ++u) {
        const std::uint64_t base = ((jmod * u) % N) * mN % m;
        for (std::uint64_t v = 0; v < p; ++v)
            if (cnt[u][v]) red[(base + v * mp) % m] += cnt[u][v];
    }
    return CyclotomicInt::from_root_counts(m, red);
}

}  // namespace

GaussTable gauss_brute_all(const FieldCtx& F, std::uint64_t N, std::uint64_t enum_bound) {
    check_gauss_pre(F, N, enum_bound);
    const std::uint64_t p = F.characteristic();
    if (std::gcd(p, N) != 1) throw std::logic_error("gauss: N shares a factor with p");
    auto cnt = character_counts(F, N);

    GaussTable table;
    table.N = N;
    table.conductor = static_cast<unsigned>(N <= 2 ? p : p * N);
    table.value.reserve(N);
    for (std::uint64_t j = 0; j < N; ++j) {
        CyclotomicInt v = gauss_from_counts(p, N, j, cnt);
        if (v.conductor() != table.conductor) v = v.to_conductor(table.conductor);
        table.value.push_back(std::move(v));
    }
    return table;
}

CyclotomicInt gauss_brute(const FieldCtx& F, std::uint64_t N, std::uint64_t j,
                          std::uint64_t enum_bound) {
    check_gauss_pre(F, N, enum_bound);
    const std::uint64_t p = F.characteristic();
    if (std::gcd(p, N) != 1) throw std::logic_error("gauss: N shares a factor with p");
    return gauss_from_counts(p, N, j, character_counts(F, N));
}

std::complex<double> gauss_brute_complex(const FieldCtx& F, std::uint64_t N, std::uint64_t j,
                                         std::uint64_t enum_bound) {
    check_gauss_pre(F, N, enum_bound);
    const std::uint64_t p = F.characteristic();
    auto cnt = character_counts(F, N);
    std::complex<double> acc(0.0, 0.0);
    for (std::uint64_t u = 0; u < N; ++u) {
        const double thN = 2.0 * M_PI * static_cast<double>((j * u) % N) / static_cast<double>(N);
        for (std::uint64_t v = 0; v < p; ++v) {
            if (!cnt[u][v]) continue;
            const double th = thN + 2.0 * M_PI * static_cast<double>(v) / static_cast<double>(p);
            acc += static_cast<double>(cnt[u][v]) * std::complex<double>(std::cos(th), std::sin(th));
        }
    }
    return acc;
}

SuiteReport gauss_property_suite(const FieldCtx& F, std::uint64_t N, std::uint64_t enum_bound) {
    SuiteReport report;
    GaussTable t = gauss_brute_all(F, N, enum_bound);
    const unsigned m = t.conductor;
    const std::uint64_t p = F.characteristic();
    const CyclotomicInt q_val = CyclotomicInt::integer(m, F.order());
    const CyclotomicInt minus_one = CyclotomicInt::integer(m, -1);

    if (t.value[0] != minus_one) report.failures.push_back("principal character: G != -1");
    for (std::uint64_t j = 1; j < N; ++j) {
        if (t.value[j] * t.value[j].conj() != q_val)
            report.failures.push_back("|G|^2 != q at j=" + std::to_string(j));
    }
    for (std::uint64_t j = 0; j < N; ++j) {
        if (t.value[(j * (p % N)) % N] != t.value[j])
            report.failures.push_back("G(chi^p) != G(chi) at j=" + std::to_string(j));
    }
    // chi^j(-1) = zeta_N^{j (q-1)/2} for odd q, trivial for q even; always +-1.
    BigInt half_order = F.group_order() / 2;  // 0 when q = 2
    std::uint64_t neg_log_mod_N =
        (F.characteristic() == 2) ? 0 : BigInt(half_order % BigInt(static_cast<unsigned long>(N))).get_ui();
    for (std::uint64_t j = 0; j < N; ++j) {
        std::uint64_t eps_exp = (j * neg_log_mod_N) % N;
        if (eps_exp != 0 && 2 * eps_exp != N) {
            report.failures.push_back("chi(-1) is not +-1 at j=" + std::to_string(j));
            continue;
        }
        CyclotomicInt rhs = t.value[j].conj() * BigInt(eps_exp == 0 ? 1 : -1);
        if (t.value[(N - j) % N] != rhs)
            report.failures.push_back("G(chi^-1) != chi(-1) conj(G) at j=" + std::to_string(j));
    }
    return report;
}

CyclotomicInt quadratic_gauss_sum(std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p)) throw std::invalid_argument("quadratic_gauss_sum: p must be an odd prime");
    std::vector<long long> counts(p, 0);
    for (std::uint64_t t = 0; t < p; ++t) counts[(t * t) % p] += 1;
    return CyclotomicInt::from_root_counts(static_cast<unsigned>(p), counts);
}

CyclotomicInt quadratic_gauss_closed(std::uint64_t p, unsigned f) {
    if (f == 0) throw std::invalid_argument("quadratic_gauss_closed: f must be positive");
    CyclotomicInt g = quadratic_gauss_sum(p);
    CyclotomicInt acc = g;
    for (unsigned i = 1; i < f; ++i) acc = acc * g;
    if (f % 2 == 0) acc = -acc;  // (-1)^(f-1)
    return acc;
}

SuiteReport weil_sum_check(const FieldCtx& F, const FieldElem& a, const FieldElem& b,
                           std::uint64_t d, std::uint64_t enum_bound) {
    SuiteReport report;
    if (F.is_zero(a)) throw std::invalid_argument("weil_sum_check: a must be nonzero");
    check_gauss_pre(F, d, enum_bound);
    const std::uint64_t p = F.characteristic();
    const unsigned m = static_cast<unsigned>(d <= 2 ? p : p * d);

    // LHS = sum over all x (including 0) of psi(a x^d + b).
    std::vector<long long> counts(p, 0);
    counts[F.abs_trace(b)] += 1;  // x = 0
    {
        FieldElem alpha_d = F.pow_u64(F.generator(), d);
        FieldElem y = F.one(), tmp, w;
        std::vector<std::uint64_t> scratch;
        const std::uint64_t units = F.group_order().get_ui();
        for (std::uint64_t t = 0; t < units; ++t) {
            F.mul_to(a, y, w, scratch);
            counts[F.abs_trace(F.add(w, b))] += 1;
            F.mul_to(y, alpha_d, tmp, scratch);
            y.swap(tmp);
        }
    }
    std::vector<long long> red(m, 0);
    for (std::uint64_t v = 0; v < p; ++v) red[v * (m / p)] = counts[v];
    CyclotomicInt lhs = CyclotomicInt::from_root_counts(m, red);

    // RHS = psi(b) sum_{i=1}^{d-1} chi^{-i}(a) G(chi^i).
    CyclotomicInt rhs(m);
    if (d > 1) {
        GaussTable gt = gauss_brute_all(F, d, enum_bound);
        std::uint64_t la = CosetIndexer(F, d).index(a);
        for (std::uint64_t i = 1; i < d; ++i) {
            std::uint64_t e = (d - (i * la) % d) % d;  // exponent of chi^{-i}(a)
            if (d <= 2)
                rhs = rhs + gt.value[i] * BigInt(e == 0 ? 1 : -1);
            else
                rhs = rhs + gt.value[i] * CyclotomicInt::root_power(m, e * (m / d));
        }
    }
    rhs = rhs * CyclotomicInt::root_power(m, static_cast<std::uint64_t>(F.abs_trace(b)) * (m / p));

    if (lhs != rhs) report.failures.push_back("Weil sum identity failed");
    return report;
}

}  // namespace twozero
