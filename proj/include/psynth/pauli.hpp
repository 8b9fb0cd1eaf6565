// Copyright 2026 The psynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PSYNTH_PAULI_HPP
#define PSYNTH_PAULI_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psynth {

/// Raised for malformed user input or violated preconditions.
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component.
enum class PauliLetter : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool has_x(PauliLetter p) { return (static_cast<std::uint8_t>(p) & 1u) != 0; }
constexpr bool has_z(PauliLetter p) { return (static_cast<std::uint8_t>(p) & 2u) != 0; }
constexpr PauliLetter letter_from_bits(bool x, bool z) {
    return static_cast<PauliLetter>((x ? 1u : 0u) | (z ? 2u : 0u));
}

char to_char(PauliLetter p);
PauliLetter letter_from_char(char c);

/// Product of two letters: a*b = i^phase * letter.
struct LetterProduct {
    PauliLetter letter;
    int phase;  // power of i, in [0, 4)
};
LetterProduct multiply(PauliLetter a, PauliLetter b);

/// Tensor product of letters; index i is qubit i.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::size_t num_qubits) : letters_(num_qubits, PauliLetter::I) {}
    explicit PauliString(std::vector<PauliLetter> letters) : letters_(std::move(letters)) {}

    /// Parses "XIYZ"-style text. Throws InputError on any other character.
    static PauliString parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    PauliLetter operator[](std::size_t i) const { return letters_[i]; }
    PauliLetter &operator[](std::size_t i) { return letters_[i]; }
    const std::vector<PauliLetter> &letters() const { return letters_; }

    /// Number of non-identity letters.
    std::size_t leg_count() const;
    std::string str() const;

    bool operator==(const PauliString &) const = default;

   private:
    std::vector<PauliLetter> letters_;
};

std::ostream &operator<<(std::ostream &out, const PauliString &s);

/// exp(-i * angle/2 * string).
struct PauliGadget {
    double angle = 0;
    PauliString string;

    bool operator==(const PauliGadget &) const = default;
};

/// True iff the two gadgets' strings commute. Throws InputError on length mismatch.
bool commutes(const PauliString &a, const PauliString &b);
bool commutes(const PauliGadget &a, const PauliGadget &b);

/// Ordered product of gadgets; gadgets[0] is applied first.
class PauliPolynomial {
   public:
    explicit PauliPolynomial(std::size_t num_qubits);
    PauliPolynomial(std::size_t num_qubits, std::vector<PauliGadget> gadgets);

    void add(PauliGadget gadget);
    void add(double angle, std::string_view string);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return gadgets_.size(); }
    bool empty() const { return gadgets_.empty(); }
    const PauliGadget &operator[](std::size_t i) const { return gadgets_[i]; }
    const std::vector<PauliGadget> &gadgets() const { return gadgets_; }

    /// Same strings, every angle multiplied by `factor`.
    PauliPolynomial scaled(double factor) const;

    bool operator==(const PauliPolynomial &) const = default;

   private:
    std::size_t num_qubits_;
    std::vector<PauliGadget> gadgets_;
};

/// Text format: "qubits <q>" header, then "<angle> <string>" per line.
/// Blank lines and lines starting with '#' are skipped.
PauliPolynomial parse_polynomial(std::string_view text);
std::string serialize_polynomial(const PauliPolynomial &poly);

enum class CliffordKind : std::uint8_t { H, S, Sdg, V, Vdg, CNOT };

std::string_view name(CliffordKind kind);

/// One of the propagation gates. For CNOT, q0 is the control and q1 the target.
struct CliffordGate {
    CliffordKind kind;
    std::size_t q0 = 0;
    std::size_t q1 = 0;

    static CliffordGate h(std::size_t q) { return {CliffordKind::H, q, q}; }
    static CliffordGate s(std::size_t q) { return {CliffordKind::S, q, q}; }
    static CliffordGate sdg(std::size_t q) { return {CliffordKind::Sdg, q, q}; }
    static CliffordGate v(std::size_t q) { return {CliffordKind::V, q, q}; }
    static CliffordGate vdg(std::size_t q) { return {CliffordKind::Vdg, q, q}; }
    static CliffordGate cnot(std::size_t control, std::size_t target);

    std::size_t arity() const { return kind == CliffordKind::CNOT ? 2 : 1; }
    CliffordGate adjoint() const;

    bool operator==(const CliffordGate &) const = default;
};

std::ostream &operator<<(std::ostream &out, const CliffordGate &g);

/// Result of conjugating the letters under a gate's qubits.
struct Conjugated {
    std::array<PauliLetter, 2> letters{PauliLetter::I, PauliLetter::I};
    bool sign_flip = false;
};

/// Computes g^dagger * P * g for the letters of P on the gate's qubits
/// (letters[0] on q0, letters[1] on q1 for CNOT). Only the first arity()
/// entries are read and written.
Conjugated conjugate_letter(const CliffordGate &gate, std::array<PauliLetter, 2> letters);

/// Replaces `gadget` by g * gadget * g^dagger, i.e. the gadget as seen after `g` was
/// moved from behind it to in front of it. Sign flips are folded into the angle.
void propagate_through(const CliffordGate &g, PauliGadget &gadget);

}  // namespace psynth

#endif
