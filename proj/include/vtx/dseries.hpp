#pragma once

#include <map>
#include <string>
#include <vector>

#include "vtx/qrat.hpp"

namespace vtx {

// Polynomial in the Kahler variables Q_e, truncated at a total degree
// cutoff, with exact QRat coefficients. Keys are exponent vectors over a
// fixed variable list; zero coefficients are never stored.
class DegreeSeries {
public:
    DegreeSeries() = default;
    DegreeSeries(std::vector<std::string> vars, int cutoff);
    static DegreeSeries one(std::vector<std::string> vars, int cutoff);

    const std::vector<std::string>& vars() const { return vars_; }
    int cutoff() const { return cutoff_; }

    QRat coeff(const std::vector<int>& key) const;  // zero if absent
    void add_term(const std::vector<int>& key, const QRat& value);
    const std::map<std::vector<int>, QRat>& terms() const { return terms_; }

    bool is_one() const;
    QRat constant_term() const;

    DegreeSeries operator-() const;
    friend DegreeSeries operator+(const DegreeSeries& a, const DegreeSeries& b);
    friend DegreeSeries operator-(const DegreeSeries& a, const DegreeSeries& b);
    friend DegreeSeries operator*(const DegreeSeries& a, const DegreeSeries& b);
    DegreeSeries& operator+=(const DegreeSeries& o) { return *this = *this + o; }

    bool operator==(const DegreeSeries& o) const = default;

    // Formal log; requires constant term exactly 1.
    DegreeSeries log() const;
    // Formal exp; requires constant term exactly 0.
    DegreeSeries exp() const;

    // Identify all variables: sum of exponents becomes the degree in a
    // single variable named `var`.
    DegreeSeries collapsed(const std::string& var) const;

    std::string str() const;

private:
    static void check_aligned(const DegreeSeries& a, const DegreeSeries& b);
    std::vector<std::string> vars_;
    int cutoff_ = 0;
    std::map<std::vector<int>, QRat> terms_;
};

}  // namespace vtx
