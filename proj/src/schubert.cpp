#include "cquad/schubert.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace cquad {

namespace {

Partition trimmed(Partition p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

bool is_partition(const Partition& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) return false;
    return true;
}

} // namespace

SchubertClass::SchubertClass(unsigned k, unsigned n) : k_(k), n_(n) {
    if (k >= n) throw std::invalid_argument("G(k,n) needs 0 <= k < n");
}

SchubertClass SchubertClass::sigma(unsigned k, unsigned n, Partition lambda, const BigInt& coeff) {
    SchubertClass c(k, n);
    lambda = trimmed(std::move(lambda));
    if (!is_partition(lambda)) throw std::invalid_argument("parts must be weakly decreasing");
    if (!c.fits(lambda))
        throw std::invalid_argument("partition (" + partition_string(lambda) + ") does not fit the " +
                                    std::to_string(c.rows()) + "x" + std::to_string(c.cols()) + " box");
    c.add(lambda, coeff);
    return c;
}

bool SchubertClass::fits(const Partition& lambda) const {
    if (lambda.size() > rows()) return false;
    for (unsigned part : lambda)
        if (part > cols()) return false;
    return true;
}

BigInt SchubertClass::coeff(const Partition& lambda) const {
    auto it = terms_.find(trimmed(lambda));
    return it == terms_.end() ? BigInt(0) : it->second;
}

void SchubertClass::add(const Partition& lambda, const BigInt& c) {
    if (c == 0) return;
    Partition key = trimmed(lambda);
    BigInt& slot = terms_[key];
    slot += c;
    if (slot == 0) terms_.erase(key);
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
    if (k_ != o.k_ || n_ != o.n_) throw std::invalid_argument("classes on different Grassmannians");
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

SchubertClass operator*(const BigInt& c, const SchubertClass& a) {
    SchubertClass out(a.k_, a.n_);
    for (const auto& [p, x] : a.terms_) out.add(p, c * x);
    return out;
}

std::string SchubertClass::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        BigInt mag = abs(c);
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        if (mag != 1) out += mag.get_str() + "*";
        out += "sigma(" + partition_string(p) + ")";
    }
    return out;
}

unsigned weight(const Partition& lambda) {
    unsigned w = 0;
    for (unsigned p : lambda) w += p;
    return w;
}

std::string partition_string(const Partition& lambda) {
    std::string out;
    for (std::size_t i = 0; i < lambda.size(); ++i) out += (i ? "," : "") + std::to_string(lambda[i]);
    return out;
}

SchubertClass pieri1(const SchubertClass& c) {
    SchubertClass out(c.k(), c.n());
    for (const auto& [p, coeff] : c.terms()) {
        for (std::size_t row = 0; row <= p.size() && row < c.rows(); ++row) {
            Partition q = p;
            if (row == q.size()) q.push_back(0);
            ++q[row];
            if (q[row] > c.cols()) continue;
            if (row > 0 && q[row] > q[row - 1]) continue;
            out.add(q, coeff);
        }
    }
    return out;
}

Partition complement(unsigned k, unsigned n, const Partition& lambda) {
    SchubertClass box(k, n);
    if (!box.fits(lambda)) throw std::invalid_argument("partition does not fit the box");
    Partition padded = lambda;
    padded.resize(box.rows(), 0);
    Partition out(box.rows());
    for (unsigned i = 0; i < box.rows(); ++i) out[i] = box.cols() - padded[box.rows() - 1 - i];
    return trimmed(out);
}

BigInt duality_pair(const SchubertClass& a, const SchubertClass& b) {
    if (a.k() != b.k() || a.n() != b.n()) throw std::invalid_argument("classes on different Grassmannians");
    BigInt total = 0;
    for (const auto& [p, x] : a.terms()) {
        for (const auto& [q, y] : b.terms()) {
            if (weight(p) + weight(q) != a.dimension())
                throw std::invalid_argument("codimensions are not complementary: |" + partition_string(p) + "| + |" +
                                            partition_string(q) + "| != " + std::to_string(a.dimension()));
            if (q == complement(a.k(), a.n(), p)) total += x * y;
        }
    }
    return total;
}

BigInt sigma1_power_degree(unsigned k, unsigned n, unsigned m) {
    SchubertClass c = SchubertClass::sigma(k, n, {});
    if (m != c.dimension())
        throw std::invalid_argument("exponent must equal dim G(k,n) = " + std::to_string(c.dimension()));
    for (unsigned i = 0; i < m; ++i) c = pieri1(c);
    return c.coeff(Partition(c.rows(), c.cols()));
}

BigInt p_dot_r2(bool with_cover_factor) {
    SchubertClass surface = SchubertClass::sigma(1, 3, {2}) + SchubertClass::sigma(1, 3, {1, 1});
    SchubertClass sigma1_sq = pieri1(pieri1(SchubertClass::sigma(1, 3, {})));
    BigInt bare = duality_pair(surface, sigma1_sq);
    return with_cover_factor ? BigInt(2 * bare) : bare;
}

namespace {

class ExprParser {
public:
    ExprParser(unsigned k, unsigned n, const std::string& text) : k_(k), n_(n), s_(text) {}

    SchubertClass parse() {
        SchubertClass total(k_, n_);
        skip();
        if (done()) fail("empty expression");
        int sign = 1;
        if (peek() == '-' || peek() == '+') {
            sign = get() == '-' ? -1 : 1;
        }
        while (true) {
            total += BigInt(sign) * term();
            skip();
            if (done()) break;
            char c = get();
            if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
            sign = c == '-' ? -1 : 1;
        }
        return total;
    }

private:
    SchubertClass term() {
        BigInt coeff = 1;
        unsigned sigma1_power = 0;
        std::optional<Partition> other;
        while (true) {
            skip();
            if (done()) fail("missing factor");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                BigInt v = number();
                coeff *= pow_of(v, exponent());
            } else {
                Partition p = sigma_partition();
                unsigned e = exponent();
                if (p.empty()) {
                } else if (p == Partition{1}) {
                    sigma1_power += e;
                } else if (e > 0) {
                    if (other || e > 1)
                        fail("products of two classes other than sigma1 need Littlewood-Richardson, not supported");
                    other = p;
                }
            }
            skip();
            if (done() || peek() != '*') break;
            get();
        }
        SchubertClass c = SchubertClass::sigma(k_, n_, other.value_or(Partition{}), coeff);
        for (unsigned i = 0; i < sigma1_power; ++i) c = pieri1(c);
        return c;
    }

    static BigInt pow_of(const BigInt& b, unsigned e) {
        BigInt r = 1;
        for (unsigned i = 0; i < e; ++i) r *= b;
        return r;
    }

    unsigned exponent() {
        skip();
        if (done() || peek() != '^') return 1;
        get();
        skip();
        BigInt e = number();
        if (e > 64) fail("exponent too large");
        return static_cast<unsigned>(e.get_ui());
    }

    Partition sigma_partition() {
        if (s_.compare(pos_, 5, "sigma") != 0) fail("expected sigma or an integer");
        pos_ += 5;
        if (!done() && peek() == '_') get();
        if (!done() && (peek() == '(' || peek() == '{')) {
            char close = get() == '(' ? ')' : '}';
            Partition p;
            skip();
            if (!done() && peek() == close) {
                get();
                return p;
            }
            while (true) {
                skip();
                p.push_back(static_cast<unsigned>(number().get_ui()));
                skip();
                if (done()) fail("unterminated partition");
                char c = get();
                if (c == close) break;
                if (c != ',') fail("expected ',' in partition");
            }
            return check(p);
        }
        Partition p;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) p.push_back(static_cast<unsigned>(get() - '0'));
        if (p.empty()) fail("sigma needs a partition");
        return check(p);
    }

    Partition check(Partition p) {
        p = trimmed(std::move(p));
        if (!is_partition(p)) fail("parts must be weakly decreasing");
        return p;
    }

    BigInt number() {
        std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number");
        return BigInt(s_.substr(start, pos_ - start));
    }

    void skip() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("schubert expression, position " + std::to_string(pos_) + ": " + why);
    }

    unsigned k_, n_;
    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

SchubertClass evaluate_schubert(unsigned k, unsigned n, const std::string& expr) {
    return ExprParser(k, n, expr).parse();
}

Json to_json(const SchubertClass& c) {
    Json terms = Json::object();
    for (const auto& [p, x] : c.terms()) terms[partition_string(p)] = x.get_str();
    return {{"grassmannian", {c.k(), c.n()}}, {"terms", terms}};
}

} // namespace cquad
