#pragma once

#include <compare>
#include <string>
#include <vector>

namespace pkmlab {

// Symbolic message term. Equality is structural; a total order makes terms
// usable as set keys.
//
// Conventions for atom labels:
//   "pk_pub:<name>" / "pk_priv:<name>"  RSA key halves of a principal
//   "dh_exp:<id>"                       a Diffie-Hellman exponent the holder owns
//   "nonce:<value>" "sec:ak:<value>"    fresh values, labeled by content
class Term {
public:
    enum class Kind { atom, pair, hash_of, pk_enc, dh_pub, dh_shared };

    static Term atom(std::string label);
    static Term pair(Term first, Term second);
    static Term hash_of(Term inner);
    static Term pk_enc(std::string key_id, Term payload);
    static Term dh_pub(std::string exponent_id);
    // Shared secret from one exponent and one public value. When the public
    // value is itself dh_pub(y), the pair is normalized so both derivations
    // of the same secret compare equal.
    static Term dh_shared(std::string exponent_id, Term public_part);

    // Right-nested tuple: tuple(a,b,c) == pair(a, pair(b, c)).
    static Term tuple(std::vector<Term> parts);

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    const std::vector<Term>& args() const { return args_; }

    std::string to_string() const;

    bool operator==(const Term& other) const;
    std::strong_ordering operator<=>(const Term& other) const;

private:
    Term(Kind kind, std::string label, std::vector<Term> args)
        : kind_(kind), label_(std::move(label)), args_(std::move(args)) {}

    Kind kind_;
    std::string label_;
    std::vector<Term> args_;
};

}  // namespace pkmlab
