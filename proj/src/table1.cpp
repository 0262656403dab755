#include "rootorbits/table1.hpp"

#include <algorithm>
#include <numeric>

namespace rootorbits {

namespace {

IVec unit(int n, int i) {
    IVec v(n, 0);
    v[i - 1] = 1;
    return v;
}

IVec sum_range(int n, int from, int to) {
    IVec v(n, 0);
    for (int i = from; i <= to; ++i) v[i - 1] += 1;
    return v;
}

std::string diagram_from_chains(const std::vector<std::vector<IVec>>& chains) {
    std::vector<int> ranks;
    for (const auto& ch : chains) ranks.push_back((int)ch.size());
    std::sort(ranks.rbegin(), ranks.rend());
    std::string s;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) s += "x";
        s += "A" + std::to_string(ranks[i]);
    }
    return s.empty() ? "-" : s;
}

TableRow make_row(std::string type, int n, int k, std::vector<std::vector<IVec>> chains) {
    TableRow row;
    row.type = std::move(type);
    row.n = n;
    row.k = k;
    row.diagram = diagram_from_chains(chains);
    row.chains = std::move(chains);
    row.kappa = 1;
    return row;
}

} // namespace

std::vector<TableRow> golden_table1() {
    std::vector<TableRow> rows;

    // A(1): beta_j = alpha_{j+1}, split between the two arcs of the cycle.
    for (auto [n, k] : {std::pair<int, int>{4, 2}, {5, 2}}) {
        std::vector<std::vector<IVec>> chains;
        std::vector<IVec> first, second;
        for (int j = 1; j <= k - 1; ++j) first.push_back(unit(n, j + 1));
        for (int j = k; j <= n - 2; ++j) second.push_back(unit(n, j + 1));
        if (!first.empty()) chains.push_back(first);
        if (!second.empty()) chains.push_back(second);
        rows.push_back(make_row("A(1)", n, k, std::move(chains)));
    }

    // B(1) at n=5: beta_j = alpha_{j+1}, beta_{n-2} = alpha_1 + ... + alpha_{n-1}.
    {
        int n = 5;
        std::vector<IVec> first;
        for (int j = 1; j <= n - 3; ++j) first.push_back(unit(n, j + 1));
        rows.push_back(make_row("B(1)", n, 0, {first, {sum_range(n, 1, n - 1)}}));
    }

    // C(1) at n=4: a single chain beta_j = alpha_{j+1}.
    {
        int n = 4;
        std::vector<IVec> chain;
        for (int j = 1; j <= n - 2; ++j) chain.push_back(unit(n, j + 1));
        rows.push_back(make_row("C(1)", n, 0, {chain}));
    }

    // D(1) at n=5: beta_j = alpha_{j+2}, plus the two fork roots.
    {
        int n = 5;
        std::vector<IVec> first;
        for (int j = 1; j <= n - 4; ++j) first.push_back(unit(n, j + 2));
        IVec fork1 = vec_add(unit(n, 1), sum_range(n, 3, n - 1));
        IVec fork2 = vec_add(unit(n, 2), sum_range(n, 3, n - 1));
        rows.push_back(make_row("D(1)", n, 0, {first, {fork1}, {fork2}}));
    }

    // E6(1), n=7.
    {
        int n = 7;
        IVec b1 = vec_add(unit(n, 4), unit(n, 5));
        IVec b2 = vec_add(vec_add(unit(n, 1), unit(n, 2)), vec_add(unit(n, 5), unit(n, 6)));
        IVec b3 = vec_add(unit(n, 2), unit(n, 5));
        IVec b4 = vec_add(vec_add(unit(n, 3), unit(n, 4)), vec_add(unit(n, 5), unit(n, 6)));
        IVec b5 = vec_add(vec_add(unit(n, 2), unit(n, 4)), vec_add(unit(n, 5), unit(n, 6)));
        rows.push_back(make_row("E6(1)", n, 0, {{b1, b2}, {b3, b4}, {b5}}));
    }

    // E7(1), n=8.
    {
        int n = 8;
        IVec b1 = vec_add(unit(n, 4), unit(n, 5));
        IVec b2 = vec_add(unit(n, 1), vec_add(unit(n, 5), unit(n, 6)));
        IVec b3 = sum_range(n, 2, 7);
        IVec b4 = sum_range(n, 3, 6);
        IVec b5 = vec_add(unit(n, 1), sum_range(n, 4, 7));
        IVec b6 = vec_add(vec_add(unit(n, 1), unit(n, 5)), sum_range(n, 3, 7));
        rows.push_back(make_row("E7(1)", n, 0, {{b1, b2, b3}, {b4, b5}, {b6}}));
    }

    // E8(1), n=9.
    {
        int n = 9;
        IVec b1 = vec_add(unit(n, 3), vec_add(unit(n, 4), unit(n, 5)));
        IVec b2 = vec_add(unit(n, 1), sum_range(n, 4, 6));
        IVec b3 = sum_range(n, 2, 7);
        IVec b4 = vec_add(unit(n, 1), sum_range(n, 3, 8));
        IVec b5 = vec_add(vec_add(unit(n, 1), unit(n, 4)), sum_range(n, 3, 7));
        IVec b6 = vec_add(vec_add(unit(n, 4), unit(n, 5)), sum_range(n, 1, 8));
        IVec b7 = vec_add(vec_add(unit(n, 4), sum_range(n, 3, 6)), sum_range(n, 1, 8));
        rows.push_back(make_row("E8(1)", n, 0, {{b1, b2, b3, b4}, {b5, b6}, {b7}}));
    }

    // F4(1), n=5.
    {
        int n = 5;
        IVec b1 = vec_add(unit(n, 2), unit(n, 3));
        IVec b2 = sum_range(n, 1, 4);
        IVec b3 = vec_add(unit(n, 2), sum_range(n, 2, 4));
        rows.push_back(make_row("F4(1)", n, 0, {{b1, b2}, {b3}}));
    }

    // G2(1), n=3.
    {
        int n = 3;
        rows.push_back(make_row("G2(1)", n, 0, {{vec_add(unit(n, 1), unit(n, 2))}}));
    }

    return rows;
}

int table1_entry_count() {
    int count = 0;
    for (const TableRow& row : golden_table1())
        for (const auto& chain : row.chains)
            for (const IVec& v : chain) count += (int)v.size();
    return count;
}

bool TableReport::all_match() const {
    return std::all_of(rows.begin(), rows.end(), [](const TableRowDiff& r) { return r.match; });
}

std::string diagram_string(const UpsilonData& ud) {
    std::vector<std::vector<IVec>> chains;
    for (const UpsilonComponent& comp : ud.components) chains.push_back(comp.chain);
    return diagram_from_chains(chains);
}

namespace {

std::string chain_str(const std::vector<IVec>& chain) {
    std::string s = "[";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) s += " ";
        s += "(";
        for (std::size_t j = 0; j < chain[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(chain[i][j]);
        }
        s += ")";
    }
    return s + "]";
}

} // namespace

TableReport regenerate_table1(int mutate_index) {
    std::vector<TableRow> golden = golden_table1();
    if (mutate_index >= 0) {
        int idx = mutate_index;
        bool done = false;
        for (TableRow& row : golden) {
            for (auto& chain : row.chains) {
                for (IVec& v : chain) {
                    if (idx < (int)v.size()) {
                        v[idx] += 1;
                        done = true;
                        break;
                    }
                    idx -= (int)v.size();
                }
                if (done) break;
            }
            if (done) break;
        }
        if (!done) fail(Err::BadInput, "mutation index out of range");
    }

    TableReport report;
    for (const TableRow& row : golden) {
        TableRowDiff diff;
        diff.label = row.type + " n=" + std::to_string(row.n) +
                     (row.k > 0 ? " k=" + std::to_string(row.k) : "");
        try {
            CartanData cd = builtin_system(row.type, row.n, row.k);
            AffineFrame fr = affine_frame(cd);
            std::vector<int> order(cd.n);
            std::iota(order.begin(), order.end(), 0);
            CoxeterWord c = make_coxeter(cd, order);
            GammaData gd = gamma_c(cd, fr, c);
            UpsilonData ud = upsilon_fin(cd, fr, c, gd);

            std::vector<std::vector<IVec>> computed;
            for (const UpsilonComponent& comp : ud.components) computed.push_back(comp.chain);
            std::vector<std::vector<IVec>> expected = row.chains;
            std::sort(computed.begin(), computed.end());
            std::sort(expected.begin(), expected.end());

            bool chains_ok = computed == expected;
            bool diagram_ok = diagram_string(ud) == row.diagram;
            bool kappa_ok = true;
            for (const UpsilonComponent& comp : ud.components)
                kappa_ok = kappa_ok && comp.kappa == row.kappa;

            diff.match = chains_ok && diagram_ok && kappa_ok;
            if (!chains_ok) {
                diff.detail = "simples differ:";
                for (const auto& ch : computed) diff.detail += " got " + chain_str(ch);
                for (const auto& ch : expected) diff.detail += " want " + chain_str(ch);
            } else if (!diagram_ok) {
                diff.detail = "diagram " + diagram_string(ud) + " != " + row.diagram;
            } else if (!kappa_ok) {
                diff.detail = "kappa differs";
            }
        } catch (const RootError& e) {
            diff.match = false;
            diff.detail = e.what();
        }
        report.rows.push_back(std::move(diff));
    }
    return report;
}

} // namespace rootorbits
