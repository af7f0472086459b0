#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sweedler {

// Base class for everything the library throws.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mixing scalars from different fields (Q vs F_p, or different p).
struct field_mismatch : error {
    using error::error;
};

// Malformed external input (JSON, scalar strings, builtin names).
struct parse_error : error {
    using error::error;
};

// A structure failed an axiom check that an operation requires.
struct validation_error : error {
    using error::error;
};

// Inverting a singular matrix or map.
struct singular_error : error {
    using error::error;
};

/// The exact ground field: the rationals, or a prime field F_p with p < 2^61.
///
/// Internally a field is a single 64-bit modulus; 0 stands for Q. Primality
/// is checked once, when the field is created, so scalar arithmetic can
/// trust the modulus unconditionally.
class Field {
public:
    static Field rationals() { return Field{0}; }

    /// Prime field of order p. Throws parse_error unless p is prime and < 2^61.
    static Field prime(std::uint64_t p);

    /// Parses "Q" or "Fp:<p>" (the CLI spelling).
    static Field parse(const std::string& text);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime() const { return p_ != 0; }
    std::uint64_t modulus() const { return p_; }

    bool operator==(const Field&) const = default;

    std::string str() const;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;

    friend class Scalar;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace sweedler
