#include "pg/groupspec.hpp"

#include <algorithm>
#include <cctype>

#include "pg/arith.hpp"
#include "pg/catalog.hpp"
#include "pg/errors.hpp"

namespace pg {

namespace {

struct Token {
    std::string text;
    std::size_t offset;
};

std::vector<Token> tokenize(const std::string& input) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < input.size()) {
        if (std::isspace(static_cast<unsigned char>(input[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < input.size() && !std::isspace(static_cast<unsigned char>(input[i]))) ++i;
        out.push_back({input.substr(start, i - start), start});
    }
    return out;
}

void append_term(GroupSpec& spec, const Token& tok) {
    if (tok.text.size() >= 2 && tok.text[0] == 'C' &&
        std::all_of(tok.text.begin() + 1, tok.text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        long long n = 0;
        for (std::size_t i = 1; i < tok.text.size(); ++i) {
            if (n > 1'000'000'000'000'000LL)
                throw ParseError("cyclic factor order is too large", tok.offset);
            n = n * 10 + (tok.text[i] - '0');
        }
        if (n < 2) throw ParseError("C0 and C1 are not valid cyclic factors", tok.offset);
        for (const PrimePower& pp : factorize(n).factors)
            spec.terms.push_back({true, checked_pow(pp.prime, pp.exponent), {}});
        return;
    }
    if (catalog_has(tok.text)) {
        spec.terms.push_back({false, catalog_group(tok.text)->order(), tok.text});
        return;
    }
    throw ParseError("unknown group term '" + tok.text + "'", tok.offset);
}

}  // namespace

std::string SpecTerm::text() const {
    return cyclic ? "C" + std::to_string(order) : name;
}

std::string GroupSpec::text() const {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " x ";
        out += terms[i].text();
    }
    return out;
}

long long GroupSpec::order() const {
    long long n = 1;
    for (const SpecTerm& t : terms) n = checked_mul(n, t.order);
    return n;
}

NilpotentGroup GroupSpec::build() const {
    std::vector<Atom> atoms;
    for (const SpecTerm& t : terms) {
        Atom a;
        if (t.cyclic) {
            a.cyclic_order = t.order;
        } else {
            a.tbl = catalog_group(t.name);
        }
        atoms.push_back(std::move(a));
    }
    return NilpotentGroup::from_atoms(std::move(atoms));
}

GroupSpec parse_group_spec(const std::string& input) {
    const std::vector<Token> tokens = tokenize(input);
    if (tokens.empty()) throw ParseError("empty group specification", 0);
    GroupSpec spec;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i % 2 == 0) {
            if (tokens[i].text == "x")
                throw ParseError("expected a group term, found 'x'", tokens[i].offset);
            append_term(spec, tokens[i]);
        } else if (tokens[i].text != "x") {
            throw ParseError("expected 'x' between terms, found '" + tokens[i].text + "'",
                             tokens[i].offset);
        }
    }
    if (tokens.size() % 2 == 0)
        throw ParseError("dangling 'x' at end of specification", tokens.back().offset);
    return spec;
}

GroupSpec spec_from_prime_powers(std::vector<long long> prime_powers) {
    std::vector<std::pair<long long, long long>> keyed;   // (prime, order)
    for (long long q : prime_powers) {
        if (q < 2) throw DomainError("prime-power factor below 2");
        const Factorization f = factorize(q);
        if (f.num_primes() != 1)
            throw DomainError("factor " + std::to_string(q) + " is not a prime power");
        keyed.emplace_back(f.prime(0), q);
    }
    std::sort(keyed.begin(), keyed.end());
    GroupSpec spec;
    for (const auto& [p, q] : keyed) spec.terms.push_back({true, q, {}});
    return spec;
}

}  // namespace pg
