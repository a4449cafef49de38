#include "pg/catalog.hpp"

#include <map>

#include "pg/errors.hpp"

namespace pg {

namespace {

std::shared_ptr<const SmallGroup> build_q8() {
    // Elements: 1, -1, i, -i, j, -j, k, -k encoded as (s, a) with sign s and
    // axis a in {1, i, j, k}; index = 2*axis + (negative ? 1 : 0).
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto axis = [](int x) { return x / 2; };
    auto neg = [](int x) { return x % 2; };
    // Axis product table with result sign: 1ijk times 1ijk.
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    CayleyTable t;
    t.order = 8;
    t.name = "Q8";
    t.mul.resize(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int a = ax[axis(x)][axis(y)];
            int s = (neg(x) + neg(y) + sg[axis(x)][axis(y)]) % 2;
            t.mul[x * 8 + y] = 2 * a + s;
        }
    return std::make_shared<SmallGroup>(std::move(t), std::move(names));
}

std::shared_ptr<const SmallGroup> build_d8() {
    // (a, b): rotation a in Z4, flip b in Z2; index = b*4 + a.
    // (a1,b1)(a2,b2) = (a1 + (-1)^{b1} a2 mod 4, b1 + b2).
    std::vector<std::string> names = {"1", "r", "r2", "r3", "f", "rf", "r2f", "r3f"};
    CayleyTable t;
    t.order = 8;
    t.name = "D8";
    t.mul.resize(64);
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) {
            int a1 = x % 4, b1 = x / 4, a2 = y % 4, b2 = y / 4;
            int a = ((b1 ? a1 - a2 : a1 + a2) % 4 + 4) % 4;
            int b = (b1 + b2) % 2;
            t.mul[x * 8 + y] = b * 4 + a;
        }
    return std::make_shared<SmallGroup>(std::move(t), std::move(names));
}

std::shared_ptr<const SmallGroup> build_m16() {
    // a of order 8, b of order 2, b a b^-1 = a^5.  Element a^i b^j has
    // index j*8 + i; (i1,j1)(i2,j2) = (i1 + i2 * 5^{j1} mod 8, j1 + j2).
    std::vector<std::string> names;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 8; ++i) {
            std::string s;
            if (i == 1) s = "a";
            else if (i > 1) s = "a" + std::to_string(i);
            if (j) s += "b";
            if (s.empty()) s = "1";
            names.push_back(s);
        }
    CayleyTable t;
    t.order = 16;
    t.name = "M16";
    t.mul.resize(256);
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) {
            int i1 = x % 8, j1 = x / 8, i2 = y % 8, j2 = y / 8;
            int i = (i1 + i2 * (j1 ? 5 : 1)) % 8;
            int j = (j1 + j2) % 2;
            t.mul[x * 16 + y] = j * 8 + i;
        }
    return std::make_shared<SmallGroup>(std::move(t), std::move(names));
}

std::shared_ptr<const SmallGroup> build_heis27() {
    // Upper unitriangular 3x3 matrices over F3, encoded as tuples (a, b, c)
    // with index a*9 + b*3 + c and product
    // (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2).
    // Names use the normal form x^a y^b z^t where (a,b,c) = x^a y^b z^{c-ab}.
    std::vector<std::string> names(27);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                int tpow = ((c - a * b) % 3 + 3) % 3;
                std::string s;
                auto app = [&](const char* g, int e) {
                    if (e == 0) return;
                    s += g;
                    if (e > 1) s += std::to_string(e);
                };
                app("x", a);
                app("y", b);
                app("z", tpow);
                if (s.empty()) s = "1";
                names[a * 9 + b * 3 + c] = s;
            }
    CayleyTable t;
    t.order = 27;
    t.name = "Heis27";
    t.mul.resize(27 * 27);
    for (int x = 0; x < 27; ++x)
        for (int y = 0; y < 27; ++y) {
            int a1 = x / 9, b1 = x / 3 % 3, c1 = x % 3;
            int a2 = y / 9, b2 = y / 3 % 3, c2 = y % 3;
            int a = (a1 + a2) % 3, b = (b1 + b2) % 3, c = (c1 + c2 + a1 * b2) % 3;
            t.mul[x * 27 + y] = a * 9 + b * 3 + c;
        }
    return std::make_shared<SmallGroup>(std::move(t), std::move(names));
}

const std::map<std::string, std::shared_ptr<const SmallGroup>>& table() {
    static const auto* m = new std::map<std::string, std::shared_ptr<const SmallGroup>>{
        {"Q8", build_q8()},
        {"D8", build_d8()},
        {"M16", build_m16()},
        {"Heis27", build_heis27()},
    };
    return *m;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, _] : table()) v.push_back(k);
        return v;
    }();
    return names;
}

bool catalog_has(const std::string& name) { return table().count(name) > 0; }

std::shared_ptr<const SmallGroup> catalog_group(const std::string& name) {
    auto it = table().find(name);
    if (it == table().end()) throw DomainError("unknown catalog group '" + name + "'");
    return it->second;
}

}  // namespace pg
