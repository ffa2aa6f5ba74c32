#include "twozero/finite_field.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace twozero {

namespace {

// --- raw polynomial helpers over F_p (little-endian coefficient vectors) ---

unsigned poly_degree(const std::vector<std::uint32_t>& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i]) return static_cast<unsigned>(i);
    return 0;
}

bool poly_is_zero(const std::vector<std::uint32_t>& f) {
    for (auto c : f)
        if (c) return false;
    return true;
}

// a * b mod f, f monic of degree d, inputs of degree < d.
std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& f,
                                       std::uint64_t p) {
    unsigned d = static_cast<unsigned>(f.size()) - 1;
    if (d == 0) return {};
    std::vector<std::uint64_t> acc(2 * d - 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        if (!a[i]) continue;
        std::uint64_t ai = a[i];
        for (unsigned j = 0; j < d; ++j) acc[i + j] += ai * b[j];
    }
    for (unsigned i = 2 * d - 2; i >= d; --i) {
        std::uint64_t v = acc[i] % p;
        if (v) {
            for (unsigned j = 0; j < d; ++j)
                if (f[j]) acc[i - d + j] += v * (p - f[j]);
        }
        if (i == d) break;
    }
    std::vector<std::uint32_t> out(d);
    for (unsigned i = 0; i < d; ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
    return out;
}

// x^(p) of a residue class g (mod f), by square-and-multiply on the exponent p.
std::vector<std::uint32_t> poly_pow_p(const std::vector<std::uint32_t>& g,
                                      const std::vector<std::uint32_t>& f,
                                      std::uint64_t p) {
    unsigned d = static_cast<unsigned>(f.size()) - 1;
    std::vector<std::uint32_t> result(d, 0), base = g;
    if (d == 0) return result;
    result[0] = 1;
    std::uint64_t e = p;
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        e >>= 1;
        if (e) base = poly_mulmod(base, base, f, p);
    }
    return result;
}

std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& b,
                                    std::uint64_t p) {
    unsigned db = poly_degree(b);
    std::uint64_t lead_inv = inv_mod_u64(b[db], p);
    while (!poly_is_zero(a) && poly_degree(a) >= db) {
        unsigned da = poly_degree(a);
        std::uint64_t c = mul_mod_u64(a[da], lead_inv, p);
        for (unsigned j = 0; j <= db; ++j) {
            std::uint64_t sub = mul_mod_u64(c, b[j], p);
            a[da - db + j] = static_cast<std::uint32_t>((a[da - db + j] + p - sub) % p);
        }
        a[da] = 0;
    }
    return a;
}

std::vector<std::uint32_t> poly_gcd(std::vector<std::uint32_t> a,
                                    std::vector<std::uint32_t> b, std::uint64_t p) {
    while (!poly_is_zero(b)) {
        auto r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Monic irreducibility test over F_p: x^(p^d) == x mod f together with
// gcd(x^(p^(d/r)) - x, f) = 1 for every prime r | d.
bool poly_irreducible(const std::vector<std::uint32_t>& f, std::uint64_t p) {
    unsigned d = static_cast<unsigned>(f.size()) - 1;
    if (d == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // cheap root screen
    if (p <= 100000) {
        for (std::uint64_t r = 0; r < p; ++r) {
            std::uint64_t v = 0;
            for (std::size_t i = f.size(); i-- > 0;) v = (mul_mod_u64(v, r, p) + f[i]) % p;
            if (v == 0) return false;
        }
        if (d <= 3) return true;  // no roots suffices up to cubics
    }
    std::vector<unsigned> proper_exps;  // d / r for prime r | d
    for (const auto& pp : factorize(BigInt(static_cast<unsigned long>(d))))
        proper_exps.push_back(d / static_cast<unsigned>(pp.prime.get_ui()));

    std::vector<std::uint32_t> x_class(d, 0);
    if (d > 1) x_class[1] = 1;
    std::vector<std::uint32_t> h = x_class;  // will hold x^(p^i)
    for (unsigned i = 1; i <= d; ++i) {
        h = poly_pow_p(h, f, p);
        bool is_proper = std::find(proper_exps.begin(), proper_exps.end(), i) != proper_exps.end();
        if (is_proper) {
            std::vector<std::uint32_t> diff(d);
            for (unsigned j = 0; j < d; ++j)
                diff[j] = static_cast<std::uint32_t>((h[j] + p - x_class[j]) % p);
            auto g = poly_gcd(f, diff, p);
            if (poly_degree(g) != 0) return false;
        }
    }
    return h == x_class;
}

}  // namespace

FieldCtx::FieldCtx(std::uint64_t p, unsigned d, unsigned generator_rank) : p_(p), d_(d) {
    if (!is_prime_u64(p)) throw std::invalid_argument("FieldCtx: p is not prime");
    if (d == 0) throw std::invalid_argument("FieldCtx: degree must be positive");

    mpz_ui_pow_ui(order_.get_mpz_t(), static_cast<unsigned long>(p), d);
    group_order_ = order_ - 1;
    {
        // p^d - 1 = prod over j | d of Phi_j(p): factor the smaller pieces.
        std::map<BigInt, unsigned> acc;
        for (std::uint64_t j : divisors_u64(d))
            for (const auto& pp : factorize(cyclotomic_value(static_cast<unsigned>(j), BigInt(p))))
                acc[pp.prime] += pp.exponent;
        for (const auto& [q, e] : acc) group_factors_.push_back({q, e});
    }

    // Lex-smallest monic irreducible modulus, constant term most significant.
    if (d == 1) {
        modulus_ = {0, 1};  // f(x) = x
    } else {
        std::vector<std::uint32_t> c(d, 0);
        c[0] = 1;  // constant term 0 would be divisible by x
        while (true) {
            std::vector<std::uint32_t> f = c;
            f.push_back(1);
            if (poly_irreducible(f, p)) {
                modulus_ = f;
                break;
            }
            // lexicographic successor: last coordinate ticks fastest
            int pos = static_cast<int>(d) - 1;
            while (pos >= 0 && c[pos] == p - 1) c[pos--] = 0;
            if (pos < 0) throw std::logic_error("FieldCtx: no irreducible polynomial found");
            c[pos]++;
        }
    }
    for (unsigned j = 0; j < d; ++j)
        if (modulus_[j]) modulus_support_.push_back(j);

    // Newton's identities: trace_vec_[j] = power sum of the modulus roots.
    trace_vec_.assign(d, 0);
    trace_vec_[0] = static_cast<std::uint32_t>(d % p);
    for (unsigned j = 1; j < d; ++j) {
        std::uint64_t s = mul_mod_u64(j % p, modulus_[d - j], p);
        for (unsigned i = 1; i < j; ++i)
            s = (s + mul_mod_u64(modulus_[d - i], trace_vec_[j - i], p)) % p;
        trace_vec_[j] = static_cast<std::uint32_t>((p - s) % p);
    }

    packable_ = mpz_sizeinbase(order_.get_mpz_t(), 2) <= 62;
    packed_order_ = packable_ ? order_.get_ui() : 0;

    // Frobenius matrix columns: (t^j)^p = (t^p)^j.
    {
        std::vector<std::uint32_t> x_class(d, 0);
        if (d > 1) x_class[1] = 1;
        else x_class[0] = 0;  // d = 1: t is the zero class
        std::vector<std::uint32_t> tp = poly_pow_p(x_class, modulus_, p);
        frob_cols_.resize(d);
        frob_cols_[0] = one();
        for (unsigned j = 1; j < d; ++j) frob_cols_[j] = poly_mulmod(frob_cols_[j - 1], tp, modulus_, p);
    }

    // Lex-smallest primitive element (rank-th when generator_rank > 0).
    {
        FieldElem x = zero();
        unsigned remaining = generator_rank;
        bool found = false;
        while (next_element(x)) {
            if (is_zero(x)) continue;
            if (is_primitive(x)) {
                if (remaining == 0) {
                    generator_ = x;
                    found = true;
                    break;
                }
                --remaining;
            }
        }
        if (!found) throw std::logic_error("FieldCtx: no primitive element found");
    }
}

FieldCtx build_field(std::uint64_t p, unsigned d) { return FieldCtx(p, d); }

FieldElem FieldCtx::one() const {
    FieldElem x(d_, 0);
    x[0] = 1 % p_;
    return x;
}

FieldElem FieldCtx::from_int(std::uint64_t value) const {
    FieldElem x(d_, 0);
    x[0] = static_cast<std::uint32_t>(value % p_);
    return x;
}

bool FieldCtx::is_zero(const FieldElem& x) const {
    for (auto c : x)
        if (c) return false;
    return true;
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    FieldElem r(d_);
    for (unsigned i = 0; i < d_; ++i) {
        std::uint64_t s = static_cast<std::uint64_t>(a[i]) + b[i];
        r[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
    }
    return r;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    FieldElem r(d_);
    for (unsigned i = 0; i < d_; ++i)
        r[i] = static_cast<std::uint32_t>((a[i] + p_ - b[i]) % p_);
    return r;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    FieldElem r(d_);
    for (unsigned i = 0; i < d_; ++i) r[i] = static_cast<std::uint32_t>(a[i] ? p_ - a[i] : 0);
    return r;
}

FieldElem FieldCtx::scalar_mul(std::uint32_t c, const FieldElem& a) const {
    FieldElem r(d_);
    for (unsigned i = 0; i < d_; ++i) r[i] = static_cast<std::uint32_t>(mul_mod_u64(c, a[i], p_));
    return r;
}

void FieldCtx::mul_to(const FieldElem& a, const FieldElem& b, FieldElem& out,
                      std::vector<std::uint64_t>& scratch) const {
    const unsigned d = d_;
    scratch.assign(2 * d - 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        if (!a[i]) continue;
        const std::uint64_t ai = a[i];
        std::uint64_t* acc = scratch.data() + i;
        for (unsigned j = 0; j < d; ++j) acc[j] += ai * b[j];
    }
    for (unsigned i = 2 * d - 2; i >= d; --i) {
        std::uint64_t v = scratch[i] % p_;
        if (v) {
            for (unsigned j : modulus_support_) scratch[i - d + j] += v * (p_ - modulus_[j]);
        }
        if (i == d) break;
    }
    out.resize(d);
    for (unsigned i = 0; i < d; ++i) out[i] = static_cast<std::uint32_t>(scratch[i] % p_);
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    FieldElem out;
    std::vector<std::uint64_t> scratch;
    mul_to(a, b, out, scratch);
    return out;
}

FieldElem FieldCtx::pow(const FieldElem& a, const BigInt& e) const {
    if (e < 0) throw std::invalid_argument("FieldCtx::pow: negative exponent");
    if (e == 0) return one();
    std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    FieldElem result = a, tmp;
    std::vector<std::uint64_t> scratch;
    for (std::size_t i = nbits - 1; i-- > 0;) {
        mul_to(result, result, tmp, scratch);
        result.swap(tmp);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
            mul_to(result, a, tmp, scratch);
            result.swap(tmp);
        }
    }
    return result;
}

FieldElem FieldCtx::pow_u64(const FieldElem& a, std::uint64_t e) const {
    return pow(a, BigInt(static_cast<unsigned long>(e)));
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    if (is_zero(a)) throw std::invalid_argument("FieldCtx::inv: zero element");
    return pow(a, group_order_ - 1);
}

std::uint32_t FieldCtx::abs_trace(const FieldElem& x) const {
    std::uint64_t s = 0;
    for (unsigned i = 0; i < d_; ++i) s += mul_mod_u64(x[i], trace_vec_[i], p_);
    return static_cast<std::uint32_t>(s % p_);
}

FieldElem FieldCtx::frobenius(const FieldElem& x) const {
    FieldElem r(d_, 0);
    for (unsigned j = 0; j < d_; ++j) {
        if (!x[j]) continue;
        const FieldElem& col = frob_cols_[j];
        for (unsigned i = 0; i < d_; ++i)
            r[i] = static_cast<std::uint32_t>((r[i] + mul_mod_u64(x[j], col[i], p_)) % p_);
    }
    return r;
}

bool FieldCtx::is_primitive(const FieldElem& x) const {
    if (is_zero(x)) return false;
    for (const auto& pp : group_factors_) {
        FieldElem y = pow(x, group_order_ / pp.prime);
        if (y == one()) return false;
    }
    return true;
}

std::uint64_t FieldCtx::pack(const FieldElem& x) const {
    if (!packable_) throw std::runtime_error("FieldCtx::pack: field too large");
    std::uint64_t v = 0;
    for (std::size_t i = x.size(); i-- > 0;) v = v * p_ + x[i];
    return v;
}

FieldElem FieldCtx::unpack(std::uint64_t v) const {
    FieldElem x(d_);
    for (unsigned i = 0; i < d_; ++i) {
        x[i] = static_cast<std::uint32_t>(v % p_);
        v /= p_;
    }
    return x;
}

bool FieldCtx::next_element(FieldElem& x) const {
    if (x.size() != d_) {
        x.assign(d_, 0);
        return true;
    }
    int pos = static_cast<int>(d_) - 1;
    while (pos >= 0 && x[pos] == p_ - 1) x[pos--] = 0;
    if (pos < 0) return false;
    x[pos]++;
    return true;
}

std::uint64_t discrete_log(const FieldCtx& F, const FieldElem& x, std::uint64_t feasibility_bound) {
    if (F.is_zero(x)) throw std::invalid_argument("discrete_log: zero element");
    if (!F.packable() || F.order() > BigInt(static_cast<unsigned long>(feasibility_bound)))
        throw std::runtime_error("discrete_log: field too large for full discrete logs");
    std::uint64_t n = F.group_order().get_ui();
    // baby-step giant-step
    std::uint64_t m = 1;
    while (m * m < n) ++m;
    std::unordered_map<std::uint64_t, std::uint64_t> baby;
    baby.reserve(m * 2);
    FieldElem cur = F.one();
    std::vector<std::uint64_t> scratch;
    FieldElem tmp;
    for (std::uint64_t j = 0; j < m; ++j) {
        baby.emplace(F.pack(cur), j);
        F.mul_to(cur, F.generator(), tmp, scratch);
        cur.swap(tmp);
    }
    FieldElem giant = F.pow(F.generator(), F.group_order() - BigInt(static_cast<unsigned long>(m % n)));
    FieldElem y = x;
    for (std::uint64_t i = 0; i <= n / m + 1; ++i) {
        auto it = baby.find(F.pack(y));
        if (it != baby.end()) return (i * m + it->second) % n;
        F.mul_to(y, giant, tmp, scratch);
        y.swap(tmp);
    }
    throw std::logic_error("discrete_log: no solution found (broken generator?)");
}

CosetIndexer::CosetIndexer(const FieldCtx& F, std::uint64_t N) : F_(F), N_(N) {
    if (N == 0 || N > 10000) throw std::invalid_argument("CosetIndexer: N out of range");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), F.group_order().get_mpz_t(),
                BigInt(static_cast<unsigned long>(N)).get_mpz_t());
    if (r != 0) throw std::invalid_argument("CosetIndexer: N does not divide the group order");
    cofactor_ = q;
    FieldElem g0 = F.pow(F.generator(), cofactor_);
    FieldElem cur = F.one();
    table_.reserve(N);
    for (std::uint64_t j = 0; j < N; ++j) {
        table_.emplace_back(cur, j);
        cur = F.mul(cur, g0);
    }
    std::sort(table_.begin(), table_.end());
}

std::uint64_t CosetIndexer::index(const FieldElem& x) const {
    if (F_.is_zero(x)) throw std::invalid_argument("coset_index: zero element");
    FieldElem y = F_.pow(x, cofactor_);
    auto it = std::lower_bound(table_.begin(), table_.end(), y,
                               [](const auto& entry, const FieldElem& key) { return entry.first < key; });
    if (it == table_.end() || it->first != y)
        throw std::logic_error("coset_index: power not found in coset table");
    return it->second;
}

std::uint64_t coset_index(const FieldCtx& F, const FieldElem& x, std::uint64_t N) {
    return CosetIndexer(F, N).index(x);
}

TowerCtx::TowerCtx(std::uint64_t p, unsigned sub_degree, unsigned rel_degree,
                   unsigned generator_rank)
    : big_(p, sub_degree * rel_degree, generator_rank), sub_(p, sub_degree), k_(rel_degree) {
    const unsigned D = big_.degree();
    const unsigned ds = sub_degree;
    if (sub_.order() > BigInt(10000000ul))
        throw std::runtime_error("TowerCtx: subfield too large to enumerate");

    // Subfield = {0} u <A^S>, S = (p^D - 1)/(p^ds - 1).  Find the lex-smallest
    // root of the subfield modulus among its elements.
    BigInt S = big_.group_order() / sub_.group_order();
    FieldElem z = big_.pow(big_.generator(), S);
    std::uint64_t sub_units = sub_.group_order().get_ui();
    std::vector<FieldElem> roots;
    auto eval_sub_modulus = [&](const FieldElem& x) {
        FieldElem v = big_.zero();
        const auto& f = sub_.modulus();
        for (std::size_t i = f.size(); i-- > 0;) {
            v = big_.mul(v, x);
            if (f[i]) v = big_.add(v, big_.scalar_mul(f[i], big_.one()));
        }
        return v;
    };
    if (big_.is_zero(eval_sub_modulus(big_.zero()))) roots.push_back(big_.zero());
    FieldElem cur = big_.one();
    for (std::uint64_t j = 0; j < sub_units; ++j) {
        if (big_.is_zero(eval_sub_modulus(cur))) roots.push_back(cur);
        cur = big_.mul(cur, z);
    }
    if (roots.size() != ds)
        throw std::logic_error("TowerCtx: expected exactly sub_degree roots in the subfield");
    root_ = *std::min_element(roots.begin(), roots.end());

    root_pows_.resize(ds);
    root_pows_[0] = big_.one();
    for (unsigned j = 1; j < ds; ++j) root_pows_[j] = big_.mul(root_pows_[j - 1], root_);

    // q-power Frobenius (q = p^ds) and the relative-trace matrix.
    frobq_cols_.resize(D);
    for (unsigned j = 0; j < D; ++j) {
        FieldElem e(D, 0);
        e[j] = 1;
        for (unsigned i = 0; i < ds; ++i) e = big_.frobenius(e);
        frobq_cols_[j] = e;
    }
    trace_cols_.resize(D);
    for (unsigned j = 0; j < D; ++j) {
        FieldElem e(D, 0);
        e[j] = 1;
        FieldElem acc = e, y = e;
        for (unsigned i = 1; i < k_; ++i) {
            y = apply_matrix(frobq_cols_, y);
            acc = big_.add(acc, y);
        }
        trace_cols_[j] = acc;
    }

    // Row-reduce [R | I] where R's columns are root powers; keeps the
    // transform so projection is one matrix-vector product per call.
    std::vector<std::vector<std::uint32_t>> R(D, std::vector<std::uint32_t>(ds, 0));
    for (unsigned j = 0; j < ds; ++j)
        for (unsigned i = 0; i < D; ++i) R[i][j] = root_pows_[j][i];
    solve_transform_.assign(D, std::vector<std::uint32_t>(D, 0));
    for (unsigned i = 0; i < D; ++i) solve_transform_[i][i] = 1;
    pivot_col_of_row_.assign(D, -1);
    unsigned rank = 0;
    for (unsigned col = 0; col < ds && rank < D; ++col) {
        unsigned piv = rank;
        while (piv < D && R[piv][col] == 0) ++piv;
        if (piv == D) continue;
        std::swap(R[piv], R[rank]);
        std::swap(solve_transform_[piv], solve_transform_[rank]);
        std::uint64_t inv = inv_mod_u64(R[rank][col], p);
        for (unsigned j = 0; j < ds; ++j) R[rank][j] = static_cast<std::uint32_t>(mul_mod_u64(R[rank][j], inv, p));
        for (unsigned j = 0; j < D; ++j)
            solve_transform_[rank][j] = static_cast<std::uint32_t>(mul_mod_u64(solve_transform_[rank][j], inv, p));
        for (unsigned r2 = 0; r2 < D; ++r2) {
            if (r2 == rank || R[r2][col] == 0) continue;
            std::uint64_t c = R[r2][col];
            for (unsigned j = 0; j < ds; ++j)
                R[r2][j] = static_cast<std::uint32_t>((R[r2][j] + mul_mod_u64(p - c, R[rank][j], p)) % p);
            for (unsigned j = 0; j < D; ++j)
                solve_transform_[r2][j] = static_cast<std::uint32_t>(
                    (solve_transform_[r2][j] + mul_mod_u64(p - c, solve_transform_[rank][j], p)) % p);
        }
        pivot_col_of_row_[rank] = static_cast<int>(col);
        ++rank;
    }
    if (rank != ds) throw std::logic_error("TowerCtx: root powers not linearly independent");
}

FieldElem TowerCtx::apply_matrix(const std::vector<FieldElem>& cols, const FieldElem& x) const {
    const unsigned D = big_.degree();
    std::uint64_t p = big_.characteristic();
    FieldElem r(D, 0);
    for (unsigned j = 0; j < D; ++j) {
        if (!x[j]) continue;
        const FieldElem& col = cols[j];
        for (unsigned i = 0; i < D; ++i)
            r[i] = static_cast<std::uint32_t>((r[i] + mul_mod_u64(x[j], col[i], p)) % p);
    }
    return r;
}

FieldElem TowerCtx::embed(const FieldElem& sub_x) const {
    FieldElem r = big_.zero();
    for (unsigned j = 0; j < sub_.degree(); ++j)
        if (sub_x[j]) r = big_.add(r, big_.scalar_mul(sub_x[j], root_pows_[j]));
    return r;
}

bool TowerCtx::in_subfield(const FieldElem& big_x) const {
    return apply_matrix(frobq_cols_, big_x) == big_x;
}

FieldElem TowerCtx::project(const FieldElem& big_x) const {
    const unsigned D = big_.degree();
    std::uint64_t p = big_.characteristic();
    std::vector<std::uint32_t> t(D, 0);
    for (unsigned i = 0; i < D; ++i) {
        std::uint64_t s = 0;
        for (unsigned j = 0; j < D; ++j) s += mul_mod_u64(solve_transform_[i][j], big_x[j], p);
        t[i] = static_cast<std::uint32_t>(s % p);
    }
    FieldElem out(sub_.degree(), 0);
    for (unsigned r = 0; r < D; ++r) {
        if (pivot_col_of_row_[r] >= 0)
            out[static_cast<unsigned>(pivot_col_of_row_[r])] = t[r];
        else if (t[r] != 0)
            throw std::logic_error("TowerCtx::project: element not in the embedded subfield");
    }
    return out;
}

FieldElem TowerCtx::trace(const FieldElem& big_x) const {
    return project(apply_matrix(trace_cols_, big_x));
}

FieldElem TowerCtx::trace_in_big(const FieldElem& big_x) const {
    return apply_matrix(trace_cols_, big_x);
}

bool TowerCtx::trace_is_zero(const FieldElem& big_x) const {
    return big_.is_zero(apply_matrix(trace_cols_, big_x));
}

FieldElem TowerCtx::norm(const FieldElem& big_x) const {
    if (big_.is_zero(big_x)) return sub_.zero();
    BigInt S = big_.group_order() / sub_.group_order();
    return project(big_.pow(big_x, S));
}

}  // namespace twozero
