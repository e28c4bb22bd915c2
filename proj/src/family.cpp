#include "specdiss/family.hpp"

#include <sstream>

#include "specdiss/errors.hpp"

namespace specdiss {

int FamilySpec::vertex_count() const {
    int base = family == FamilyType::G ? 7 : 5;
    return base + a + b + c + 2 * (p + q + r);
}

void FamilySpec::validate() const {
    if (a < 0 || b < 0 || c < 0 || p < 0 || q < 0 || r < 0)
        throw invalid_parameter("family spec parameters must be nonnegative");
}

std::string FamilySpec::to_string() const {
    std::ostringstream os;
    os << (family == FamilyType::G ? 'G' : 'H') << '(' << a << ',' << b << ',' << c << ';' << p << ',' << q << ','
       << r << ')';
    return os.str();
}

FamilySpec FamilySpec::parse(const std::string& text) {
    FamilySpec s;
    std::size_t i = 0;
    auto fail = [&](const char* msg) -> parse_error { return parse_error(std::string("family spec: ") + msg, i); };
    auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_ws();
    if (i >= text.size()) throw fail("empty");
    if (text[i] == 'G' || text[i] == 'g')
        s.family = FamilyType::G;
    else if (text[i] == 'H' || text[i] == 'h')
        s.family = FamilyType::H;
    else
        throw fail("expected G or H");
    ++i;
    skip_ws();
    if (i >= text.size() || text[i] != '(') throw fail("expected '('");
    ++i;
    int* slots[6] = {&s.a, &s.b, &s.c, &s.p, &s.q, &s.r};
    for (int k = 0; k < 6; ++k) {
        skip_ws();
        bool any = false;
        int val = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            val = val * 10 + (text[i] - '0');
            ++i;
            any = true;
        }
        if (!any) throw fail("expected integer");
        *slots[k] = val;
        skip_ws();
        char want = k == 2 ? ';' : (k == 5 ? ')' : ',');
        if (i >= text.size() || (text[i] != want && !(want == ';' && text[i] == ',')))
            throw fail("expected separator");
        ++i;
    }
    skip_ws();
    if (i != text.size()) throw fail("trailing characters");
    return s;
}

FamilyGraph build_family_graph(const FamilySpec& spec) {
    spec.validate();
    FamilyGraph fg;
    fg.spec = spec;
    const bool g_type = spec.family == FamilyType::G;
    Graph g(spec.vertex_count());

    if (g_type) {
        for (int i = 0; i + 1 < 7; ++i) g.add_edge(i, i + 1);
        fg.spine = {0, 1, 2, 3, 4, 5, 6};
        fg.anchors = {0, 3, 6};
    } else {
        // W_5 as x1 - center - x'_3 - x3 with the pendant leaf x2 at center
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(1, 3);
        g.add_edge(3, 4);
        fg.spine = {0, 1, 2, 3, 4};
        fg.anchors = {0, 2, 4};
    }

    int next = g_type ? 7 : 5;
    const int leaf_counts[3] = {spec.a, spec.b, spec.c};
    const int tail_counts[3] = {spec.p, spec.q, spec.r};
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < leaf_counts[i]; ++k) {
            g.add_edge(fg.anchors[i], next);
            fg.leaves[i].push_back(next++);
        }
    }
    for (int i = 0; i < 3; ++i) {
        for (int k = 0; k < tail_counts[i]; ++k) {
            int y = next++;
            int z = next++;
            g.add_edge(fg.anchors[i], y);
            g.add_edge(y, z);
            fg.tails[i].emplace_back(y, z);
        }
    }
    fg.graph = std::move(g);
    return fg;
}

Graph build_family(const FamilySpec& spec) { return build_family_graph(spec).graph; }

FamilySpec theorem1_extremal(int n) {
    if (n < 12) throw invalid_parameter("theorem1_extremal requires n >= 12");
    int m = n / 6;
    int l = n % 6;
    FamilySpec s;
    s.family = FamilyType::G;
    switch (l) {
        case 0: s = {FamilyType::G, 1, 0, 0, m - 1, m - 2, m - 1}; break;
        case 1: s = {FamilyType::G, 1, 0, 1, m - 1, m - 2, m - 1}; break;
        case 2: s = {FamilyType::G, 1, 0, 0, m - 1, m - 2, m}; break;
        case 3: s = {FamilyType::G, 0, 0, 0, m, m - 2, m}; break;
        case 4: s = {FamilyType::G, 0, 1, 0, m, m - 2, m}; break;
        case 5: s = {FamilyType::G, 0, 0, 0, m, m - 1, m}; break;
    }
    return s;
}

}  // namespace specdiss
