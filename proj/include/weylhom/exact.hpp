#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylhom {

// All arithmetic in this library is exact. Vector coordinates are stored
// doubled (value = 2 x true coordinate) so that half-integer quantities
// like the Weyl vector stay integral.
using Bigint = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedType : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct SizeExceeded : Error { using Error::Error; };
struct NotProportional : Error { using Error::Error; };
struct NotAnEdge : Error { using Error::Error; };
struct NoDiamond : Error { using Error::Error; };
struct MultipleDiamonds : Error { using Error::Error; };
struct SquareNotZero : Error { using Error::Error; };
struct NotDual : Error { using Error::Error; };
struct IntertwineFailure : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };
struct TheoremViolation : Error { using Error::Error; };

class ExactVector {
public:
    ExactVector() = default;
    explicit ExactVector(std::size_t dim) : coords_(dim) {}
    explicit ExactVector(std::vector<Bigint> coords) : coords_(std::move(coords)) {}
    ExactVector(std::initializer_list<long long> vals) {
        coords_.reserve(vals.size());
        for (long long v : vals) coords_.emplace_back(v);
    }

    std::size_t dim() const { return coords_.size(); }
    const Bigint& operator[](std::size_t i) const { return coords_[i]; }
    Bigint& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Bigint>& coords() const { return coords_; }

    friend ExactVector operator+(const ExactVector& a, const ExactVector& b) {
        ExactVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.coords_[i] = a.coords_[i] + b.coords_[i];
        return r;
    }
    friend ExactVector operator-(const ExactVector& a, const ExactVector& b) {
        ExactVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.coords_[i] = a.coords_[i] - b.coords_[i];
        return r;
    }
    friend ExactVector operator-(const ExactVector& a) {
        ExactVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.coords_[i] = -a.coords_[i];
        return r;
    }
    ExactVector& operator+=(const ExactVector& b) {
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += b.coords_[i];
        return *this;
    }
    ExactVector& operator-=(const ExactVector& b) {
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= b.coords_[i];
        return *this;
    }
    friend ExactVector operator*(const Bigint& c, const ExactVector& a) {
        ExactVector r(a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) r.coords_[i] = c * a.coords_[i];
        return r;
    }

    friend Bigint dot(const ExactVector& a, const ExactVector& b) {
        Bigint s = 0;
        for (std::size_t i = 0; i < a.dim(); ++i) s += a.coords_[i] * b.coords_[i];
        return s;
    }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const ExactVector& a, const ExactVector& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const ExactVector& a, const ExactVector& b) { return a.coords_ != b.coords_; }
    // lexicographic on coordinate arrays
    friend bool operator<(const ExactVector& a, const ExactVector& b) { return a.coords_ < b.coords_; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += coords_[i].str();
        }
        return s + ")";
    }

private:
    std::vector<Bigint> coords_;
};

inline long long to_int64(const Bigint& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw Error("integer too large for 64-bit serialization: " + v.str());
    return static_cast<long long>(v);
}

}  // namespace weylhom
