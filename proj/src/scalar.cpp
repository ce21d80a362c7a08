#include "atl/scalar.hpp"

#include <cctype>
#include <functional>
#include <optional>
#include <stdexcept>

namespace atl {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long num, long den, bool imaginary) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return imaginary ? GaussianRational(0, q) : GaussianRational(q, 0);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in Q(i)");
    mpq_class norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class s = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(s);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussianRational& a, const GaussianRational& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t GaussianRational::hash() const {
    auto h = [](const mpz_class& z) { return std::hash<std::string>{}(z.get_str(16)); };
    std::size_t seed = h(re_.get_num());
    for (std::size_t v : {h(re_.get_den()), h(im_.get_num()), h(im_.get_den())})
        seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view s) : s_(s) {}

    GaussianRational parse() {
        if (s_.empty()) fail();
        int sign1 = read_sign().value_or(1);
        std::optional<mpq_class> first = read_rational();
        if (peek('i')) {
            ++pos_;
            expect_end();
            return {0, sign1 * first.value_or(mpq_class(1))};
        }
        if (!first) fail();
        mpq_class re = sign1 * *first;
        if (at_end()) return {re, 0};
        auto sign2 = read_sign();
        if (!sign2) fail();
        std::optional<mpq_class> second = read_rational();
        if (!peek('i')) fail();
        ++pos_;
        expect_end();
        return {re, *sign2 * second.value_or(mpq_class(1))};
    }

private:
    [[noreturn]] void fail() const {
        throw std::invalid_argument("malformed scalar: '" + std::string(s_) + "'");
    }
    bool at_end() const { return pos_ == s_.size(); }
    bool peek(char c) const { return !at_end() && s_[pos_] == c; }
    void expect_end() const {
        if (!at_end()) fail();
    }

    std::optional<int> read_sign() {
        if (peek('+')) return ++pos_, 1;
        if (peek('-')) return ++pos_, -1;
        return std::nullopt;
    }

    std::optional<std::string> read_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) return std::nullopt;
        return std::string(s_.substr(start, pos_ - start));
    }

    std::optional<mpq_class> read_rational() {
        auto num = read_digits();
        if (!num) return std::nullopt;
        mpz_class n(*num, 10);
        mpz_class d(1);
        if (peek('/')) {
            ++pos_;
            auto den = read_digits();
            if (!den) fail();
            d = mpz_class(*den, 10);
            if (d == 0) throw std::invalid_argument("zero denominator in scalar: '" + std::string(s_) + "'");
        }
        mpq_class q(n, d);
        q.canonicalize();
        return q;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string rational_text(const mpq_class& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

} // namespace

GaussianRational parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::string format_scalar(const GaussianRational& a) {
    const mpq_class& re = a.re();
    const mpq_class& im = a.im();
    if (sgn(im) == 0) return rational_text(re);
    mpq_class mag = abs(im);
    std::string imag = (mag == 1 ? std::string() : rational_text(mag)) + "i";
    if (sgn(re) == 0) return (sgn(im) < 0 ? "-" : "") + imag;
    return rational_text(re) + (sgn(im) < 0 ? "-" : "+") + imag;
}

GaussianRational loop_factor(int k) {
    mpz_class v;
    mpz_pow_ui(v.get_mpz_t(), mpz_class(-2).get_mpz_t(), static_cast<unsigned long>(k));
    return {mpq_class(v), 0};
}

} // namespace atl
