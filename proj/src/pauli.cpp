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

#include "psynth/pauli.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>

namespace psynth {

char to_char(PauliLetter p) {
    switch (p) {
        case PauliLetter::I:
            return 'I';
        case PauliLetter::X:
            return 'X';
        case PauliLetter::Z:
            return 'Z';
        case PauliLetter::Y:
            return 'Y';
    }
    return '?';
}

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I':
            return PauliLetter::I;
        case 'X':
            return PauliLetter::X;
        case 'Y':
            return PauliLetter::Y;
        case 'Z':
            return PauliLetter::Z;
        default:
            throw InputError(std::string("not a Pauli letter: '") + c + "'");
    }
}

LetterProduct multiply(PauliLetter a, PauliLetter b) {
    auto result = static_cast<PauliLetter>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
    if (a == PauliLetter::I || b == PauliLetter::I || a == b) {
        return {result, 0};
    }
    // XY = iZ, YZ = iX, ZX = iY; reversed order gives -i.
    bool cyclic = (a == PauliLetter::X && b == PauliLetter::Y) || (a == PauliLetter::Y && b == PauliLetter::Z) ||
                  (a == PauliLetter::Z && b == PauliLetter::X);
    return {result, cyclic ? 1 : 3};
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<PauliLetter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        letters.push_back(letter_from_char(c));
    }
    return PauliString(std::move(letters));
}

std::size_t PauliString::leg_count() const {
    std::size_t n = 0;
    for (auto p : letters_) {
        n += p != PauliLetter::I;
    }
    return n;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(letters_.size());
    for (auto p : letters_) {
        out.push_back(to_char(p));
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const PauliString &s) { return out << s.str(); }

bool commutes(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw InputError("commutes: Pauli strings have different lengths");
    }
    std::size_t anti = 0;
    for (std::size_t i = 0; i < a.size(); i++) {
        anti += a[i] != PauliLetter::I && b[i] != PauliLetter::I && a[i] != b[i];
    }
    return anti % 2 == 0;
}

bool commutes(const PauliGadget &a, const PauliGadget &b) { return commutes(a.string, b.string); }

PauliPolynomial::PauliPolynomial(std::size_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw InputError("a Pauli polynomial needs at least one qubit");
    }
}

PauliPolynomial::PauliPolynomial(std::size_t num_qubits, std::vector<PauliGadget> gadgets)
    : PauliPolynomial(num_qubits) {
    gadgets_.reserve(gadgets.size());
    for (auto &g : gadgets) {
        add(std::move(g));
    }
}

void PauliPolynomial::add(PauliGadget gadget) {
    if (gadget.string.size() != num_qubits_) {
        throw InputError("gadget string " + gadget.string.str() + " does not have " + std::to_string(num_qubits_) +
                         " letters");
    }
    if (!std::isfinite(gadget.angle)) {
        throw InputError("gadget angle must be finite");
    }
    gadgets_.push_back(std::move(gadget));
}

void PauliPolynomial::add(double angle, std::string_view string) { add(PauliGadget{angle, PauliString::parse(string)}); }

PauliPolynomial PauliPolynomial::scaled(double factor) const {
    PauliPolynomial out(num_qubits_);
    out.gadgets_ = gadgets_;
    for (auto &g : out.gadgets_) {
        g.angle *= factor;
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail_at(std::size_t line_no, const std::string &what) {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

PauliPolynomial parse_polynomial(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::optional<PauliPolynomial> poly;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        line_no++;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        auto space = line.find_first_of(" \t");
        if (space == std::string_view::npos) {
            fail_at(line_no, "expected two fields, got '" + std::string(line) + "'");
        }
        auto first = line.substr(0, space);
        auto second = trim(line.substr(space));
        if (second.find_first_of(" \t") != std::string_view::npos) {
            fail_at(line_no, "expected two fields, got '" + std::string(line) + "'");
        }
        if (!poly) {
            if (first != "qubits") {
                fail_at(line_no, "expected header 'qubits <count>'");
            }
            std::size_t q = 0;
            auto [ptr, ec] = std::from_chars(second.data(), second.data() + second.size(), q);
            if (ec != std::errc() || ptr != second.data() + second.size() || q == 0) {
                fail_at(line_no, "invalid qubit count '" + std::string(second) + "'");
            }
            poly.emplace(q);
            continue;
        }
        double angle = 0;
        auto [ptr, ec] = std::from_chars(first.data(), first.data() + first.size(), angle);
        if (ec != std::errc() || ptr != first.data() + first.size()) {
            fail_at(line_no, "invalid angle '" + std::string(first) + "'");
        }
        if (!std::isfinite(angle)) {
            fail_at(line_no, "angle is not finite");
        }
        if (second.size() != poly->num_qubits()) {
            fail_at(line_no, "Pauli string '" + std::string(second) + "' has " + std::to_string(second.size()) +
                                 " letters, expected " + std::to_string(poly->num_qubits()));
        }
        try {
            poly->add(PauliGadget{angle, PauliString::parse(second)});
        } catch (const InputError &e) {
            fail_at(line_no, e.what());
        }
    }
    if (!poly) {
        throw InputError("missing 'qubits <count>' header");
    }
    return *std::move(poly);
}

std::string serialize_polynomial(const PauliPolynomial &poly) {
    std::string out = "qubits " + std::to_string(poly.num_qubits()) + "\n";
    char buf[64];
    for (const auto &g : poly.gadgets()) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), g.angle);
        out.append(buf, end);
        out.push_back(' ');
        out += g.string.str();
        out.push_back('\n');
    }
    return out;
}

std::string_view name(CliffordKind kind) {
    switch (kind) {
        case CliffordKind::H:
            return "H";
        case CliffordKind::S:
            return "S";
        case CliffordKind::Sdg:
            return "Sdg";
        case CliffordKind::V:
            return "V";
        case CliffordKind::Vdg:
            return "Vdg";
        case CliffordKind::CNOT:
            return "CNOT";
    }
    return "?";
}

CliffordGate CliffordGate::cnot(std::size_t control, std::size_t target) {
    if (control == target) {
        throw InputError("CNOT control and target must differ");
    }
    return {CliffordKind::CNOT, control, target};
}

CliffordGate CliffordGate::adjoint() const {
    switch (kind) {
        case CliffordKind::S:
            return {CliffordKind::Sdg, q0, q1};
        case CliffordKind::Sdg:
            return {CliffordKind::S, q0, q1};
        case CliffordKind::V:
            return {CliffordKind::Vdg, q0, q1};
        case CliffordKind::Vdg:
            return {CliffordKind::V, q0, q1};
        default:
            return *this;
    }
}

std::ostream &operator<<(std::ostream &out, const CliffordGate &g) {
    out << name(g.kind) << "(" << g.q0;
    if (g.kind == CliffordKind::CNOT) {
        out << "," << g.q1;
    }
    return out << ")";
}

namespace {

// A Pauli on at most two qubits, i^phase * (letters[0] (x) letters[1]).
struct Local {
    std::array<PauliLetter, 2> letters{PauliLetter::I, PauliLetter::I};
    int phase = 0;
};

Local operator*(const Local &a, const Local &b) {
    Local r;
    r.phase = a.phase + b.phase;
    for (int k = 0; k < 2; k++) {
        auto p = multiply(a.letters[k], b.letters[k]);
        r.letters[k] = p.letter;
        r.phase += p.phase;
    }
    r.phase &= 3;
    return r;
}

Local herm(PauliLetter p0, PauliLetter p1 = PauliLetter::I, bool negative = false) {
    return Local{{p0, p1}, negative ? 2 : 0};
}

// Images g^dagger X_k g and g^dagger Z_k g of the basis Paulis on the gate's qubits.
struct Images {
    std::array<Local, 2> x;
    std::array<Local, 2> z;
};

Images images_of(CliffordKind kind) {
    using P = PauliLetter;
    switch (kind) {
        case CliffordKind::H:
            return {{herm(P::Z)}, {herm(P::X)}};
        case CliffordKind::S:
            return {{herm(P::Y, P::I, true)}, {herm(P::Z)}};
        case CliffordKind::Sdg:
            return {{herm(P::Y)}, {herm(P::Z)}};
        case CliffordKind::V:
            return {{herm(P::X)}, {herm(P::Y)}};
        case CliffordKind::Vdg:
            return {{herm(P::X)}, {herm(P::Y, P::I, true)}};
        case CliffordKind::CNOT:
            return {{herm(P::X, P::X), herm(P::I, P::X)}, {herm(P::Z, P::I), herm(P::Z, P::Z)}};
    }
    return {};
}

}  // namespace

Conjugated conjugate_letter(const CliffordGate &gate, std::array<PauliLetter, 2> letters) {
    const Images img = images_of(gate.kind);
    const std::size_t n = gate.arity();
    Local acc;
    for (std::size_t k = 0; k < n; k++) {
        // Y = i X Z
        if (has_x(letters[k])) {
            acc = acc * img.x[k];
        }
        if (has_z(letters[k])) {
            acc = acc * img.z[k];
        }
        if (letters[k] == PauliLetter::Y) {
            acc.phase = (acc.phase + 1) & 3;
        }
    }
    Conjugated out;
    out.letters = acc.letters;
    out.sign_flip = acc.phase == 2;
    return out;
}

void propagate_through(const CliffordGate &g, PauliGadget &gadget) {
    auto &s = gadget.string;
    auto c = conjugate_letter(g.adjoint(), {s[g.q0], g.arity() == 2 ? s[g.q1] : PauliLetter::I});
    s[g.q0] = c.letters[0];
    if (g.arity() == 2) {
        s[g.q1] = c.letters[1];
    }
    if (c.sign_flip) {
        gadget.angle = -gadget.angle;
    }
}

}  // namespace psynth
