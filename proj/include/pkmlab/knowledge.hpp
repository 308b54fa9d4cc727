#pragma once

#include <set>

#include "pkmlab/term.hpp"

namespace pkmlab {

// What a Dolev-Yao attacker has gathered. The stored fact set is kept small;
// contains() answers derivability questions, so synthesized terms (pairs,
// hashes of known terms, encryptions under known public keys) count as known
// without being materialized.
class KnowledgeBase {
public:
    void add(Term t) { facts_.insert(std::move(t)); }

    const std::set<Term>& facts() const { return facts_; }

    bool has_fact(const Term& t) const { return facts_.count(t) > 0; }

    // Derivability under the attacker rules:
    //  - pairing and projection
    //  - hashing any derivable term (hashes are never inverted)
    //  - pk_enc with a known public key; pk_dec only with the private key
    //  - dh_shared(x, Y) only when exponent x is owned and Y derivable
    //    (no discrete logarithms)
    bool contains(const Term& t) const;

    bool operator==(const KnowledgeBase&) const = default;

private:
    bool owns_exponent(const std::string& id) const;

    std::set<Term> facts_;
};

// Least fixed point of the analysis rules: projections of known pairs and
// payloads of ciphertexts whose private key is known.
KnowledgeBase knowledge_closure(const KnowledgeBase& kb);

}  // namespace pkmlab
