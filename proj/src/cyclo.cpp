#include "uefg/cyclo.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "uefg/nt.hpp"

namespace uefg {

namespace {
std::atomic<long> g_order_cap{2048};
}

void set_order_cap(long cap) {
    if (cap < 1) throw std::domain_error("order cap must be positive");
    g_order_cap.store(cap);
}

long order_cap() { return g_order_cap.load(); }

// Per-order reduction data: Phi_m and the coordinates of zeta_m^j for
// every j in [0, m).
class CycloContext {
public:
    long order;
    long degree;                         // phi(m)
    std::vector<Int> phi_poly;           // length degree + 1, monic
    std::vector<std::vector<Int>> rows;  // rows[j] = coords of zeta^j
    bool rows_small = true;              // all row entries fit in int64
    std::vector<std::vector<std::int64_t>> rows64;

    static const CycloContext& get(long m);

private:
    explicit CycloContext(long m);
    static std::vector<Int> cyclotomic_poly(long m);
};

namespace {
std::mutex g_ctx_mutex;
std::map<long, std::unique_ptr<CycloContext>>& ctx_cache() {
    static std::map<long, std::unique_ptr<CycloContext>> c;
    return c;
}
}  // namespace

const CycloContext& CycloContext::get(long m) {
    if (m < 1) throw std::domain_error("cyclotomic order must be positive");
    if (m > order_cap())
        throw std::domain_error("cyclotomic order " + std::to_string(m) +
                                " exceeds configured cap " +
                                std::to_string(order_cap()));
    std::lock_guard<std::mutex> lk(g_ctx_mutex);
    auto& cache = ctx_cache();
    auto it = cache.find(m);
    if (it == cache.end())
        it = cache.emplace(m, std::unique_ptr<CycloContext>(new CycloContext(m)))
                 .first;
    return *it->second;
}

// Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, by exact synthetic division.
std::vector<Int> CycloContext::cyclotomic_poly(long m) {
    std::vector<Int> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d) continue;
        std::vector<Int> den = cyclotomic_poly(d);
        // num /= den (both monic in effect; den monic)
        const long nd = static_cast<long>(num.size()) - 1;
        const long dd = static_cast<long>(den.size()) - 1;
        std::vector<Int> quot(nd - dd + 1);
        for (long k = nd; k >= dd; --k) {
            Int q = num[k];
            if (q == 0) continue;
            quot[k - dd] = q;
            for (long i = 0; i <= dd; ++i) num[k - dd + i] -= q * den[i];
        }
        num = std::move(quot);
    }
    return num;
}

CycloContext::CycloContext(long m) : order(m) {
    phi_poly = cyclotomic_poly(m);
    degree = static_cast<long>(phi_poly.size()) - 1;
    rows.resize(m);
    for (long j = 0; j < m && j < degree; ++j) {
        rows[j].assign(degree, 0);
        rows[j][j] = 1;
    }
    // rows[j] = x * rows[j-1] mod Phi_m
    std::vector<Int> cur(degree, 0);
    if (degree > 0) cur[degree - 1] = 1;  // x^{degree-1}
    for (long j = degree; j < m; ++j) {
        // multiply by x
        Int lead = cur[degree - 1];
        for (long i = degree - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (lead != 0)
            for (long i = 0; i < degree; ++i) cur[i] -= lead * phi_poly[i];
        rows[j] = cur;
    }
    rows64.resize(m);
    for (long j = 0; j < m; ++j) {
        rows64[j].resize(degree);
        for (long i = 0; i < degree; ++i) {
            if (!rows[j][i].fits_slong_p()) {
                rows_small = false;
                break;
            }
            rows64[j][i] = rows[j][i].get_si();
        }
        if (!rows_small) {
            rows64.clear();
            break;
        }
    }
}

long cyclo_degree(long m) { return CycloContext::get(m).degree; }

CycNum::CycNum() : order_(1), c_(1, Rat(0)) {}

CycNum CycNum::from_int(const Int& v) {
    std::vector<Rat> c(1, Rat(v));
    return CycNum(1, std::move(c));
}

CycNum CycNum::from_rat(const Rat& v) {
    std::vector<Rat> c(1, v);
    return CycNum(1, std::move(c));
}

CycNum CycNum::root_of_unity(long m, long j) {
    const auto& ctx = CycloContext::get(m);
    j %= m;
    if (j < 0) j += m;
    std::vector<Rat> c(ctx.degree);
    for (long i = 0; i < ctx.degree; ++i) c[i] = Rat(ctx.rows[j][i]);
    return CycNum(m, std::move(c));
}

CycNum CycNum::from_counts(long m, const std::vector<std::int64_t>& counts) {
    const auto& ctx = CycloContext::get(m);
    if (static_cast<long>(counts.size()) != m)
        throw std::invalid_argument("from_counts: counts.size() != order");
    if (ctx.rows_small) {
        // int64 accumulation fast path; magnitudes stay far below 2^63
        // for desk-scale orders and counts
        std::vector<std::int64_t> acc(ctx.degree, 0);
        for (long j = 0; j < m && j < ctx.degree; ++j) acc[j] += counts[j];
        for (long j = ctx.degree; j < m; ++j) {
            const std::int64_t cj = counts[j];
            if (cj == 0) continue;
            const auto& row = ctx.rows64[j];
            for (long i = 0; i < ctx.degree; ++i) acc[i] += cj * row[i];
        }
        std::vector<Rat> c(ctx.degree);
        for (long i = 0; i < ctx.degree; ++i) c[i] = Rat(Int(acc[i]));
        return CycNum(m, std::move(c));
    }
    std::vector<Int> big(counts.size());
    for (size_t j = 0; j < counts.size(); ++j) big[j] = Int(counts[j]);
    return from_counts(m, big);
}

CycNum CycNum::from_counts(long m, const std::vector<Int>& counts) {
    const auto& ctx = CycloContext::get(m);
    if (static_cast<long>(counts.size()) != m)
        throw std::invalid_argument("from_counts: counts.size() != order");
    std::vector<Int> acc(ctx.degree, 0);
    for (long j = 0; j < m && j < ctx.degree; ++j) acc[j] += counts[j];
    for (long j = ctx.degree; j < m; ++j) {
        if (counts[j] == 0) continue;
        for (long i = 0; i < ctx.degree; ++i)
            acc[i] += counts[j] * ctx.rows[j][i];
    }
    std::vector<Rat> c(ctx.degree);
    for (long i = 0; i < ctx.degree; ++i) c[i] = Rat(acc[i]);
    return CycNum(m, std::move(c));
}

bool CycNum::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<Rat> CycNum::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return c_[0];
}

std::optional<Int> CycNum::as_integer() const {
    if (!is_rational()) return std::nullopt;
    if (c_[0].get_den() != 1) return std::nullopt;
    return c_[0].get_num();
}

CycNum CycNum::embedded(long M) const {
    if (M == order_) return *this;
    if (M % order_ != 0)
        throw std::domain_error("embedded: target order not a multiple");
    const auto& ctx = CycloContext::get(M);
    const long stride = M / order_;
    std::vector<Rat> out(ctx.degree, Rat(0));
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const auto& row = ctx.rows[static_cast<long>(j) * stride];
        for (long i = 0; i < ctx.degree; ++i)
            if (row[i] != 0) out[i] += c_[j] * Rat(row[i]);
    }
    return CycNum(M, std::move(out));
}

CycNum CycNum::operator-() const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return CycNum(order_, std::move(c));
}

namespace {
long lcm_order(long a, long b) { return a / gcd_i64(a, b) * b; }
}

CycNum CycNum::operator+(const CycNum& o) const {
    const long M = lcm_order(order_, o.order_);
    CycNum a = embedded(M), b = o.embedded(M);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

CycNum CycNum::operator-(const CycNum& o) const { return *this + (-o); }

CycNum CycNum::operator*(const CycNum& o) const {
    const long M = lcm_order(order_, o.order_);
    CycNum a = embedded(M), b = o.embedded(M);
    const auto& ctx = CycloContext::get(M);
    const long deg = ctx.degree;
    std::vector<Rat> prod(2 * deg - 1, Rat(0));
    for (long i = 0; i < deg; ++i) {
        if (a.c_[i] == 0) continue;
        for (long j = 0; j < deg; ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    // reduce mod Phi_M
    for (long k = 2 * deg - 2; k >= deg; --k) {
        if (prod[k] == 0) continue;
        Rat q = prod[k];
        prod[k] = 0;
        for (long i = 0; i < deg; ++i)
            if (ctx.phi_poly[i] != 0) prod[k - deg + i] -= q * Rat(ctx.phi_poly[i]);
    }
    prod.resize(deg);
    return CycNum(M, std::move(prod));
}

CycNum CycNum::scaled(const Rat& q) const {
    std::vector<Rat> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * q;
    return CycNum(order_, std::move(c));
}

CycNum CycNum::divided(const Rat& q) const {
    if (q == 0) throw std::domain_error("divided: division by zero");
    Rat inv = Rat(1) / q;
    return scaled(inv);
}

CycNum CycNum::pow(unsigned long e) const {
    CycNum r = from_int(1);
    CycNum base = *this;
    while (e) {
        if (e & 1) r *= base;
        base = (e >>= 1) ? base * base : base;
    }
    return r;
}

bool CycNum::operator==(const CycNum& o) const {
    const long M = lcm_order(order_, o.order_);
    CycNum a = embedded(M), b = o.embedded(M);
    return a.c_ == b.c_;
}

std::complex<double> CycNum::approx() const {
    std::complex<double> s(0.0, 0.0);
    const double two_pi = 2.0 * 3.14159265358979323846;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        const double ang = two_pi * static_cast<double>(j) / order_;
        s += c_[j].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return s;
}

std::string CycNum::key() const {
    std::ostringstream os;
    os << order_ << '|';
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i].get_str();
    }
    return os.str();
}

std::string CycNum::str() const {
    if (auto r = as_rational()) return r->get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << c_[j].get_str();
        if (j) os << "*z" << order_ << "^" << j;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace uefg
