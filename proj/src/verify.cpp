#include "subrack/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "subrack/cycle_forms.hpp"
#include "subrack/error.hpp"
#include "subrack/invariants.hpp"
#include "subrack/nilpotence.hpp"
#include "subrack/oracle.hpp"

namespace subrack {

double predicted_subrack_count(const FiniteGroup& g)
{
    GroupOracle o(g);
    const AtomSet z = o.center();
    if (z.size() == g.order())
        return std::ldexp(1.0, g.order());
    return std::ldexp(1.0, z.size() + conjugacy_classes(g).count()) * g.order();
}

BuiltLattice build_lattice(const FiniteGroup& g, LatticeMode mode, std::size_t cap)
{
    auto implicit = [&] { return BuiltLattice{std::make_shared<RackLattice>(conjugation_quandle(g)), false}; };
    auto enumerated = [&] {
        return BuiltLattice{std::make_shared<ExplicitLattice>(enumerate_lattice(conjugation_quandle(g), cap)), true};
    };
    switch (mode) {
    case LatticeMode::Explicit:
        return enumerated();
    case LatticeMode::Implicit:
        return implicit();
    case LatticeMode::Auto:
        break;
    }
    if (predicted_subrack_count(g) > static_cast<double>(cap))
        return implicit();
    try {
        return enumerated();
    } catch (const CapExceeded&) {
        return implicit();
    }
}

const char* status_name(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

int VerificationReport::count(CheckStatus s) const
{
    int n = 0;
    for (const auto& g : groups)
        for (const auto& c : g.checks)
            n += c.status == s;
    return n;
}

int VerificationReport::exit_code() const
{
    if (count(CheckStatus::Fail))
        return 2;
    return count(CheckStatus::Skipped) ? 4 : 0;
}

namespace {

/// A check body returns an empty string on success, otherwise the first violation.
using CheckBody = std::function<std::string()>;

std::string set_text(AtomSet s)
{
    std::string out = "{";
    for (int x : s)
        out += (out.size() > 1 ? "," : "") + std::to_string(x);
    return out + "}";
}

std::vector<AtomSet> sorted(std::vector<AtomSet> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

class GroupVerifier {
public:
    GroupVerifier(const FiniteGroup& g, LatticeMode mode, std::uint64_t seed)
        : g_(g), oracle_(g), seed_(seed)
    {
        auto built = build_lattice(g, mode);
        l_ = built.lattice;
        report_.group = g.name();
        report_.order = g.order();
        report_.explicit_lattice = built.explicit_lattice;
    }

    GroupReport run()
    {
        const int n = g_.order();
        const bool centerless = n > 1 && oracle_.center().size() == 1;
        if (n <= 8) {
            check("enumeration", [&] { return enumeration(); });
            check("recovery", [&] { return recovery(); });
        }
        if (n <= 16)
            check("explicit_implicit", [&] { return explicit_implicit(); });
        check("class_sizes", [&] { return class_sizes(); });
        check("commuting", [&] { return commuting(); });
        check("center", [&] { return center(); });
        check("centralizers", [&] { return centralizers(); });
        check("subgroup_embedding", [&] { return subgroup_embedding(); });
        check("maximal_abelian", [&] { return maximal_abelian(); });
        check("maximal_normal_abelian", [&] { return maximal_normal_abelian(); });
        check("m_set", [&] { return m_set_check(); });
        check("coset_joins", [&] { return coset_joins(); });
        check("nilpotence_class", [&] { return nilpotence(); });
        if (n <= 12)
            check("partition_survey", [&] { return partition_survey(); });
        check("p_nilpotence", [&] { return p_nilpotence(); });
        if (centerless) {
            check("cycle_forms", [&] { return cycle_forms(); });
            check("order_monotonicity", [&] { return order_monotonicity(); });
            check("associated_abelian", [&] { return associated_abelian_check(); });
            check("equal_cycle_length", [&] { return equal_cycle_length(); });
            check("theta", [&] { return theta(); });
        }
        return std::move(report_);
    }

private:
    void check(const char* name, const CheckBody& body)
    {
        CheckResult r;
        r.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            if (r.detail.rfind("ok", 0) == 0) {
                r.detail = r.detail.size() > 3 ? r.detail.substr(3) : "";
            } else if (!r.detail.empty()) {
                r.status = CheckStatus::Fail;
            }
        } catch (const CapExceeded& e) {
            r.status = CheckStatus::Skipped;
            r.detail = e.what();
        } catch (const std::exception& e) {
            r.status = CheckStatus::Fail;
            r.detail = e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        report_.checks.push_back(std::move(r));
    }

    const Lattice& l() const { return *l_; }

    const std::vector<AtomPartition>& pseudo()
    {
        if (pseudo_.empty())
            pseudo_ = all_pseudo_cycle_forms(l());
        return pseudo_;
    }

    const std::vector<AtomPartition>& forms()
    {
        if (forms_.empty())
            forms_ = all_cycle_forms(l(), pseudo());
        return forms_;
    }

    std::string enumeration()
    {
        const Rack r = conjugation_quandle(g_);
        const int n = g_.order();
        std::size_t brute = 0;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
            brute += is_subrack(AtomSet(m), r);
        const std::size_t dfs = count_elements(RackLattice(r));
        if (dfs != brute)
            return "DFS found " + std::to_string(dfs) + " subracks, subset filter " + std::to_string(brute);
        if (oracle_.is_abelian(g_.elements()) && dfs != (std::size_t{1} << n))
            return "abelian group with " + std::to_string(dfs) + " subracks";
        return "ok " + std::to_string(dfs) + " subracks";
    }

    std::string recovery()
    {
        // S is an element iff it contains the join of every pair of its atoms.
        const int n = g_.order();
        std::vector<AtomSet> pair_join(static_cast<std::size_t>(n) * n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                pair_join[x * n + y] = l().join(AtomSet::single(x), AtomSet::single(y));
        std::vector<AtomSet> rebuilt;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            const AtomSet s(m);
            bool closed = true;
            for (int x : s)
                for (int y : s)
                    closed = closed && pair_join[x * n + y].subset_of(s);
            if (closed)
                rebuilt.push_back(s);
        }
        const auto enumerated = enumerate_lattice(conjugation_quandle(g_)).elements();
        if (sorted(rebuilt) != sorted(enumerated))
            return "pair-rebuilt lattice has " + std::to_string(rebuilt.size()) + " elements, enumeration " +
                   std::to_string(enumerated.size());
        return "";
    }

    std::string explicit_implicit()
    {
        const Rack r = conjugation_quandle(g_);
        const RackLattice imp(r);
        const ExplicitLattice exp = enumerate_lattice(r);
        const int n = g_.order();
        auto compare = [&](AtomSet s, AtomSet t) -> std::string {
            if (exp.is_element(s) != imp.is_element(s))
                return "is_element differs on " + set_text(s);
            if (exp.join(s, t) != imp.join(s, t))
                return "join differs on " + set_text(s) + ", " + set_text(t);
            const AtomSet e = imp.generate(s);
            if (closure(e, exp) != closure(e, imp))
                return "closure differs on " + set_text(e);
            if (closure(e, imp) != class_closure(e, g_))
                return "closure of " + set_text(e) + " is not the union of its classes";
            return "";
        };
        std::mt19937_64 rng(seed_);
        const AtomSet all = g_.elements();
        auto random_set = [&] { return AtomSet(rng()) & all; };
        if (n <= 8) {
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
                if (auto err = compare(AtomSet(m), random_set()); !err.empty())
                    return err;
            return "ok all subsets";
        }
        for (int i = 0; i < 10000; ++i)
            if (auto err = compare(random_set(), random_set()); !err.empty())
                return err;
        return "ok 10000 random subsets";
    }

    std::string class_sizes()
    {
        const auto cc = conjugacy_classes(g_);
        ClassSizeFrequency expected;
        for (AtomSet c : cc.classes)
            ++expected[c.size()];
        if (class_size_frequency(l()) != expected)
            return "class size frequency differs from the oracle";
        if (lattice_classes(l()) != cc.classes)
            return "lattice classes differ from the conjugacy classes";
        if (static_cast<int>(l().coatoms().size()) != cc.count())
            return "coatom count differs from the class count";
        return "";
    }

    std::string commuting()
    {
        const int n = g_.order();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (l().atoms_commute(x, y) != oracle_.commute(x, y))
                    return "atoms " + std::to_string(x) + ", " + std::to_string(y);
        return "";
    }

    std::string center()
    {
        if (center_atoms(l()) != oracle_.center())
            return "located " + set_text(center_atoms(l())) + ", oracle " + set_text(oracle_.center());
        return "";
    }

    std::string centralizers()
    {
        std::vector<AtomSet> probes;
        for (int x = 0; x < g_.order(); ++x)
            probes.push_back(AtomSet::single(x));
        for (AtomSet c : conjugacy_classes(g_).classes)
            probes.push_back(c);
        for (AtomSet h : oracle_.subgroups())
            probes.push_back(h);
        for (AtomSet s : probes)
            if (centralizer_atoms(s, l()) != oracle_.centralizer(s))
                return "centralizer of " + set_text(s);
        return "";
    }

    std::string subgroup_embedding()
    {
        for (AtomSet h : oracle_.subgroups())
            if (!l().is_element(h))
                return "subgroup " + set_text(h) + " is not a lattice element";
        return "";
    }

    std::string maximal_abelian()
    {
        if (sorted(maximal_abelian_A(l()).sets) != sorted(oracle_.maximal_abelian_subgroups()))
            return "A(G) differs from the maximal abelian subgroups";
        return "";
    }

    std::string maximal_normal_abelian()
    {
        if (sorted(maximal_normal_abelian_N(l()).sets) != sorted(oracle_.maximal_normal_abelian_subgroups()))
            return "N(G) differs from the maximal normal abelian subgroups";
        return "";
    }

    std::string m_set_check()
    {
        const MSet m = m_set(l());
        for (AtomSet s : m.members)
            if (!oracle_.is_subgroup(s) || oracle_.is_normal(s))
                return "member " + set_text(s) + " is not a non-normal subgroup";
        if (!m.undecided.empty())
            throw CapExceeded(std::to_string(m.undecided.size()) + " undecided candidates (interval rack above " +
                              std::to_string(kIntervalRackCap) + " atoms)");
        for (AtomSet h : oracle_.maximal_subgroups())
            if (!oracle_.is_normal(h) && std::find(m.members.begin(), m.members.end(), h) == m.members.end())
                return "non-normal maximal subgroup " + set_text(h) + " missing";
        return "ok " + std::to_string(m.members.size()) + " members";
    }

    std::string coset_joins()
    {
        const AtomSet z = oracle_.center();
        if (!coset_joins_hold(coset_subracks(z, g_), g_))
            return "joins of center cosets are not coset unions";
        const auto c = build_central_partition(l(), g_);
        if (!quotient_poset_matches_oracle(quotient_poset(c, l()), g_))
            return "J(C) differs from the quotient lattice";
        return "";
    }

    static std::string class_text(const std::optional<int>& c)
    {
        return c ? "class " + std::to_string(*c) : "not nilpotent";
    }

    std::string nilpotence()
    {
        const auto got = nilpotence_class_from_lattice(l_, g_).nilpotence_class;
        const auto want = oracle_.nilpotence_class();
        if (got != want)
            return "lattice says " + class_text(got) + ", oracle " + class_text(want);
        return "ok " + class_text(got);
    }

    std::string partition_survey()
    {
        const auto s = survey_central_partitions(l_, g_);
        if (!s.same_answer)
            return "valid partitions disagree on the class";
        std::ostringstream out;
        out << "ok " << s.valid << " valid of " << s.partitions << (s.all_isomorphic ? "" : ", J(C) not all isomorphic");
        return out.str();
    }

    std::string p_nilpotence()
    {
        std::string summary = "ok";
        for (int p : prime_divisors(g_.order())) {
            const auto rep = p_nilpotent_from_lattice(p, l_, g_);
            const bool want = oracle_.has_normal_p_complement(p);
            summary += " p" + std::to_string(p) + "=";
            if (rep.verdict == PNilpotence::ConditionNotMet) {
                summary += "unmet";
                continue;
            }
            const bool got = rep.verdict == PNilpotence::Yes;
            if (got != want)
                return "p = " + std::to_string(p) + ": lattice " + (got ? "yes" : "no") + ", oracle " +
                       (want ? "yes" : "no");
            summary += got ? "yes" : "no";
        }
        return summary;
    }

    std::string cycle_forms()
    {
        const auto& ps = pseudo();
        const auto& cf = forms();
        for (int a = 0; a < g_.order(); ++a) {
            const auto cycles = oracle_.conjugation_cycles(a);
            for (const AtomPartition* p : {&ps[a], &cf[a]}) {
                for (std::size_t i = 0; i < p->blocks.size(); ++i) {
                    const AtomSet b = p->blocks[i];
                    for (AtomSet c : cycles)
                        if (c.intersects(b) && !c.subset_of(b))
                            return "atom " + std::to_string(a) + ": block " + set_text(b) + " splits a cycle";
                    const bool single = std::find(cycles.begin(), cycles.end(), b) != cycles.end();
                    if (p->marked[i] && !single)
                        return "atom " + std::to_string(a) + ": marked block " + set_text(b) + " is not one cycle";
                }
            }
        }
        return "";
    }

    std::string order_monotonicity()
    {
        const auto& ps = pseudo();
        const auto& cf = forms();
        const int n = g_.order();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (partition_leq(ps[v], ps[u]) && !partition_leq(cf[v], cf[u]))
                    return "atoms " + std::to_string(v) + " <= " + std::to_string(u);
        return "";
    }

    std::string associated_abelian_check()
    {
        const auto& ps = pseudo();
        for (int a = 0; a < g_.order(); ++a) {
            const AtomSet s = associated_abelian(a, ps);
            const std::string at = "atom " + std::to_string(a) + ": ";
            if (!s.contains(a))
                return at + "A(a) misses a";
            if (!oracle_.is_subgroup(s) || !oracle_.is_abelian(s))
                return at + set_text(s) + " is not an abelian subgroup";
            if (!s.subset_of(oracle_.centralizer(oracle_.centralizer(AtomSet::single(a)))))
                return at + set_text(s) + " is not inside Z(C_G(a))";
            if (s.size() % oracle_.element_order(a) != 0)
                return at + "order of a does not divide |A(a)|";
        }
        return "";
    }

    std::string equal_cycle_length()
    {
        const auto& ps = pseudo();
        std::size_t triples = 0;
        for (int a = 0; a < g_.order(); ++a)
            for (int x : associated_abelian(a, ps))
                for (const auto& v : equal_cycle_length_check(x, a, l(), g_, ps)) {
                    ++triples;
                    if (!v.holds)
                        return "x = " + std::to_string(x) + ", a = " + std::to_string(a) + ", P = " + set_text(v.part);
                }
        return "ok " + std::to_string(triples) + " triples";
    }

    std::string theta()
    {
        const auto th = theta_assignment(l());
        std::vector<std::vector<int>> got, want;
        for (const auto& [atom, primes] : th)
            got.push_back(primes);
        for (int x = 1; x < g_.order(); ++x)
            want.push_back(prime_divisors(oracle_.element_order(x)));
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want)
            return "prime support multiset differs from element orders";
        return "";
    }

    const FiniteGroup& g_;
    GroupOracle oracle_;
    std::uint64_t seed_;
    std::shared_ptr<const Lattice> l_;
    GroupReport report_;
    std::vector<AtomPartition> pseudo_;
    std::vector<AtomPartition> forms_;
};

}  // namespace

GroupReport verify_group(const FiniteGroup& g, LatticeMode mode, std::uint64_t seed)
{
    return GroupVerifier(g, mode, seed).run();
}

VerificationReport verify_catalog(int max_order, LatticeMode mode, std::uint64_t seed)
{
    std::vector<std::future<GroupReport>> jobs;
    for (const auto& e : catalog_entries())
        if (e.order <= max_order)
            jobs.push_back(std::async(std::launch::async, [name = e.name, mode, seed] {
                const FiniteGroup g = catalog_group(name);
                return verify_group(g, mode, seed);
            }));
    VerificationReport r;
    for (auto& j : jobs)
        r.groups.push_back(j.get());
    return r;
}

std::string report_to_text(const VerificationReport& r, bool timings)
{
    std::ostringstream out;
    for (const auto& g : r.groups) {
        out << g.group << " (order " << g.order << ", " << (g.explicit_lattice ? "explicit" : "implicit") << ")\n";
        for (const auto& c : g.checks) {
            out << "  " << c.name << std::string(c.name.size() < 24 ? 24 - c.name.size() : 1, ' ')
                << status_name(c.status);
            if (timings) {
                std::ostringstream ms;
                ms.precision(1);
                ms << std::fixed << c.millis;
                out << "  " << ms.str() << " ms";
            }
            if (!c.detail.empty())
                out << "  " << c.detail;
            out << "\n";
        }
    }
    out << r.count(CheckStatus::Pass) << " passed, " << r.count(CheckStatus::Fail) << " failed, "
        << r.count(CheckStatus::Skipped) << " skipped\n";
    return out.str();
}

nlohmann::json report_to_json(const VerificationReport& r, bool timings)
{
    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : r.groups) {
        nlohmann::json checks = nlohmann::json::object();
        for (const auto& c : g.checks) {
            nlohmann::json j{{"status", status_name(c.status)}};
            if (!c.detail.empty())
                j["detail"] = c.detail;
            if (timings)
                j["ms"] = c.millis;
            checks[c.name] = j;
        }
        groups.push_back({{"group", g.group},
                          {"order", g.order},
                          {"mode", g.explicit_lattice ? "explicit" : "implicit"},
                          {"checks", checks}});
    }
    return {{"groups", groups},
            {"passed", r.count(CheckStatus::Pass)},
            {"failed", r.count(CheckStatus::Fail)},
            {"skipped", r.count(CheckStatus::Skipped)}};
}

}  // namespace subrack
