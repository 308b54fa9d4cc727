#include "pkmlab/term.hpp"

#include <sstream>
#include <stdexcept>

namespace pkmlab {

Term Term::atom(std::string label) {
    return Term(Kind::atom, std::move(label), {});
}

Term Term::pair(Term first, Term second) {
    std::vector<Term> args;
    args.push_back(std::move(first));
    args.push_back(std::move(second));
    return Term(Kind::pair, {}, std::move(args));
}

Term Term::hash_of(Term inner) {
    std::vector<Term> args;
    args.push_back(std::move(inner));
    return Term(Kind::hash_of, {}, std::move(args));
}

Term Term::pk_enc(std::string key_id, Term payload) {
    std::vector<Term> args;
    args.push_back(std::move(payload));
    return Term(Kind::pk_enc, std::move(key_id), std::move(args));
}

Term Term::dh_pub(std::string exponent_id) {
    return Term(Kind::dh_pub, std::move(exponent_id), {});
}

Term Term::dh_shared(std::string exponent_id, Term public_part) {
    if (public_part.kind() == Kind::dh_pub && public_part.label() < exponent_id) {
        std::string other = public_part.label();
        public_part = dh_pub(exponent_id);
        exponent_id = std::move(other);
    }
    std::vector<Term> args;
    args.push_back(std::move(public_part));
    return Term(Kind::dh_shared, std::move(exponent_id), std::move(args));
}

Term Term::tuple(std::vector<Term> parts) {
    if (parts.empty())
        throw std::invalid_argument("Term::tuple: empty");
    Term out = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;)
        out = pair(parts[i], std::move(out));
    return out;
}

std::string Term::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::atom: os << label_; break;
        case Kind::pair:
            os << "(" << args_[0].to_string() << "," << args_[1].to_string() << ")";
            break;
        case Kind::hash_of: os << "H(" << args_[0].to_string() << ")"; break;
        case Kind::pk_enc:
            os << "enc[" << label_ << "](" << args_[0].to_string() << ")";
            break;
        case Kind::dh_pub: os << "g^{" << label_ << "}"; break;
        case Kind::dh_shared:
            os << "dh(" << label_ << "," << args_[0].to_string() << ")";
            break;
    }
    return os.str();
}

bool Term::operator==(const Term& other) const {
    return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Term::operator<=>(const Term& other) const {
    if (auto c = kind_ <=> other.kind_; c != 0) return c;
    if (auto c = label_ <=> other.label_; c != 0) return c;
    if (auto c = args_.size() <=> other.args_.size(); c != 0) return c;
    for (std::size_t i = 0; i < args_.size(); ++i)
        if (auto c = args_[i] <=> other.args_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

}  // namespace pkmlab
