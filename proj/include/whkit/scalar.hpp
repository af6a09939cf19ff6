#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace whkit {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Gaussian rational a + b*i with both parts arbitrary-precision rationals.
/// All arithmetic is exact; equality is canonical-form equality.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(long v) : re_(v), im_(0) {}
    Scalar(long num, long den) : re_(num, den), im_(0) {
        if (den == 0) throw error("Scalar: zero denominator");
        re_.canonicalize();
    }
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return is_real() && re_ == 1; }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    Scalar& operator+=(const Scalar& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        if (is_real() && o.is_real()) {
            re_ *= o.re_;
            return *this;
        }
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw error("Scalar: division by zero");
        if (is_real() && o.is_real()) {
            re_ /= o.re_;
            return *this;
        }
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const {
        Scalar r = one();
        r /= *this;
        return r;
    }

    /// Canonical text form: "a/b", "a", "a/b+c/d i", "a/b-c/d i", with each
    /// rational in lowest terms and positive denominator.
    std::string str() const {
        auto rat = [](const mpq_class& q) {
            return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
        };
        if (is_real()) return rat(re_);
        std::string s = rat(re_);
        if (sgn(im_) >= 0)
            s += "+" + rat(im_) + " i";
        else
            s += "-" + rat(mpq_class(-im_)) + " i";
        return s;
    }

    /// Parses the forms produced by str(); also accepts bare "i", "-i",
    /// "c/d i" (no real part) and integer shorthands.
    static Scalar parse(const std::string& text) {
        std::string s;
        for (char c : text)
            if (c != ' ') s.push_back(c);
        if (s.empty()) throw error("Scalar: empty literal");
        bool imag = false;
        if (s.back() == 'i') {
            imag = true;
            s.pop_back();
        }
        // split off a trailing +rat / -rat when an 'i' suffix was present
        if (imag) {
            std::size_t split = std::string::npos;
            for (std::size_t k = s.size(); k-- > 1;) {
                if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' &&
                    s[k - 1] != '-') {
                    split = k;
                    break;
                }
            }
            if (split == std::string::npos)
                return Scalar(mpq_class(0), parse_rat(s.empty() ? "1" : s));
            std::string ims = s.substr(split);
            if (ims == "+") ims = "1";
            if (ims == "-") ims = "-1";
            return Scalar(parse_rat(s.substr(0, split)), parse_rat(ims));
        }
        return Scalar(parse_rat(s), mpq_class(0));
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

private:
    static mpq_class parse_rat(const std::string& s) {
        if (s.empty() || s == "+") return mpq_class(1);
        if (s == "-") return mpq_class(-1);
        std::string t = s;
        if (t[0] == '+') t = t.substr(1);
        for (std::size_t k = 0; k < t.size(); ++k) {
            char c = t[k];
            bool ok = (c >= '0' && c <= '9') || c == '/' || (c == '-' && k == 0);
            if (!ok) throw error("Scalar: bad rational literal '" + s + "'");
        }
        mpq_class q;
        if (q.set_str(t, 10) != 0) throw error("Scalar: bad rational literal '" + s + "'");
        if (sgn(q.get_den()) == 0) throw error("Scalar: zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    }

    mpq_class re_, im_;
};

}  // namespace whkit
