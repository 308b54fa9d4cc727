#include "pkmlab/knowledge.hpp"

namespace pkmlab {

bool KnowledgeBase::owns_exponent(const std::string& id) const {
    return has_fact(Term::atom("dh_exp:" + id));
}

bool KnowledgeBase::contains(const Term& t) const {
    if (has_fact(t)) return true;
    switch (t.kind()) {
        case Term::Kind::atom:
            return false;
        case Term::Kind::pair:
            return contains(t.args()[0]) && contains(t.args()[1]);
        case Term::Kind::hash_of:
            return contains(t.args()[0]);
        case Term::Kind::pk_enc:
            return has_fact(Term::atom("pk_pub:" + t.label())) &&
                   contains(t.args()[0]);
        case Term::Kind::dh_pub:
            return owns_exponent(t.label());
        case Term::Kind::dh_shared: {
            if (owns_exponent(t.label()) && contains(t.args()[0])) return true;
            // Normalized form may carry the owned exponent inside the public
            // part: dh(x, g^y) == dh(y, g^x).
            const Term& pub = t.args()[0];
            if (pub.kind() == Term::Kind::dh_pub && owns_exponent(pub.label()) &&
                contains(Term::dh_pub(t.label())))
                return true;
            return false;
        }
    }
    return false;
}

KnowledgeBase knowledge_closure(const KnowledgeBase& kb) {
    KnowledgeBase out = kb;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Term> to_add;
        for (const Term& t : out.facts()) {
            switch (t.kind()) {
                case Term::Kind::pair:
                    for (const Term& part : t.args())
                        if (!out.has_fact(part)) to_add.push_back(part);
                    break;
                case Term::Kind::pk_enc:
                    if (out.has_fact(Term::atom("pk_priv:" + t.label())) &&
                        !out.has_fact(t.args()[0]))
                        to_add.push_back(t.args()[0]);
                    break;
                default:
                    break;  // hashes, dh values and atoms are opaque
            }
        }
        for (Term& t : to_add) {
            out.add(std::move(t));
            changed = true;
        }
    }
    return out;
}

}  // namespace pkmlab
