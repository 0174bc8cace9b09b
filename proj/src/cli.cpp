#include "subrack/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "subrack/catalog.hpp"
#include "subrack/cycle_forms.hpp"
#include "subrack/error.hpp"
#include "subrack/invariants.hpp"
#include "subrack/io.hpp"
#include "subrack/nilpotence.hpp"
#include "subrack/oracle.hpp"
#include "subrack/verify.hpp"

namespace subrack {

namespace {

struct Options {
    std::string group;
    std::string format = "text";
    std::string mode = "auto";
    std::uint64_t seed = 1;
    bool verbose = false;
    int p = 0;
    std::string atom;
    bool refined = false;
    int max_order = 24;
};

class Session {
public:
    Session(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

    int catalog();
    int lattice();
    int invariants();
    int nilpotence();
    int pnilpotence();
    int cycleforms();
    int verify();

private:
    bool json() const { return o_.format == "json"; }

    void require_format(std::initializer_list<const char*> allowed) const
    {
        for (const char* f : allowed)
            if (o_.format == f)
                return;
        throw InputError("format '" + o_.format + "' is not available for this command");
    }

    LatticeMode mode() const
    {
        if (o_.mode == "explicit")
            return LatticeMode::Explicit;
        return o_.mode == "implicit" ? LatticeMode::Implicit : LatticeMode::Auto;
    }

    const FiniteGroup& group()
    {
        if (!g_) {
            if (o_.group.empty())
                throw InputError("this command needs --group catalog:<name> or --group <file>");
            g_ = build_group(o_.group);
        }
        return *g_;
    }

    std::shared_ptr<const Lattice> lattice_view()
    {
        auto built = build_lattice(group(), mode());
        if (o_.verbose)
            err_ << "lattice: " << (built.explicit_lattice ? "explicit" : "implicit") << "\n";
        return built.lattice;
    }

    std::string set(AtomSet s) const { return format_set(s, g_->order()); }

    std::string sets(const std::vector<AtomSet>& v) const
    {
        std::string line;
        for (AtomSet s : v)
            line += (line.empty() ? "" : " ") + set(s);
        return line.empty() ? "-" : line;
    }

    const Options& o_;
    std::ostream& out_;
    std::ostream& err_;
    std::optional<FiniteGroup> g_;
};

int Session::catalog()
{
    require_format({"text", "json"});
    if (json()) {
        Json a = Json::array();
        for (const auto& e : catalog_entries())
            a.push_back({{"name", e.name}, {"order", e.order}, {"description", e.description}});
        out_ << a.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& e : catalog_entries()) {
        out_ << e.name << std::string(e.name.size() < 10 ? 10 - e.name.size() : 1, ' ') << e.order;
        out_ << std::string(e.order < 10 ? 4 : 3, ' ') << e.description << "\n";
    }
    return kExitOk;
}

int Session::lattice()
{
    if (mode() == LatticeMode::Implicit)
        throw InputError("lattice export needs the explicit lattice; use --mode auto or explicit");
    const auto l = enumerate_lattice(conjugation_quandle(group()));
    if (o_.format == "dot") {
        out_ << lattice_to_dot(l, group().name());
    } else if (json()) {
        out_ << lattice_to_json(l).dump() << "\n";
    } else {
        out_ << group().name() << ": " << l.size() << " subracks, " << l.hasse().size() << " covers\n";
        for (AtomSet s : l.elements())
            out_ << set(s) << "\n";
    }
    return kExitOk;
}

int Session::invariants()
{
    require_format({"text", "json"});
    const auto l = lattice_view();
    const InvariantReport r = invariant_report(*l);
    if (json()) {
        out_ << invariant_report_to_json(r).dump(2) << "\n";
    } else {
        out_ << "w:";
        for (auto [size, count] : r.w)
            out_ << " " << size << "x" << count;
        out_ << "\ncenter: " << set(r.center) << "\n";
        out_ << "A: " << sets(r.a.sets) << "\n";
        out_ << "N: " << sets(r.n.sets) << "\n";
        out_ << "M: " << sets(r.m.members) << "\n";
        out_ << "noncentral abelian normal: " << (r.noncentral_abelian_normal ? "yes" : "no") << "\n";
    }
    if (!r.m.undecided.empty()) {
        err_ << "warning: " << r.m.undecided.size() << " M-set candidates undecided (interval above "
             << kIntervalRackCap << " atoms): " << sets(r.m.undecided) << "\n";
        return kExitCapOrUndecided;
    }
    return kExitOk;
}

int Session::nilpotence()
{
    require_format({"text", "json"});
    const auto r = nilpotence_class_from_lattice(lattice_view(), group());
    if (json()) {
        Json trace = Json::array();
        for (const auto& s : r.trace)
            trace.push_back({{"atoms", s.atoms}, {"center", s.center}, {"blocks", s.blocks}, {"poset", s.poset}});
        Json cls = r.nilpotence_class ? Json(*r.nilpotence_class) : Json(nullptr);
        out_ << Json{{"nilpotent", r.nilpotence_class.has_value()}, {"class", cls}, {"trace", trace}}.dump(2) << "\n";
        return kExitOk;
    }
    int step = 1;
    for (const auto& s : r.trace)
        out_ << "step " << step++ << ": atoms " << s.atoms << ", center " << s.center << ", blocks " << s.blocks
             << ", poset " << s.poset << "\n";
    if (r.nilpotence_class)
        out_ << "class " << *r.nilpotence_class << "\n";
    else
        out_ << "not nilpotent\n";
    return kExitOk;
}

int Session::pnilpotence()
{
    require_format({"text", "json"});
    if (!is_prime(o_.p))
        throw InputError("--p must be a prime");
    const auto r = p_nilpotent_from_lattice(o_.p, lattice_view(), group());
    const char* verdict = r.verdict == PNilpotence::Yes ? "true"
                          : r.verdict == PNilpotence::No ? "false"
                                                         : "condition not met";
    if (o_.verbose)
        err_ << "note: the Sylow descent keeps M-set members whose atom count is a multiple of p^k\n";
    if (json()) {
        Json theta = Json::object();
        for (const auto& [atom, primes] : r.theta)
            theta[std::to_string(atom)] = primes;
        out_ << Json{{"p", o_.p},
                     {"verdict", verdict},
                     {"quotient_order", r.quotient_order},
                     {"sylow", set_to_json(r.sylow)},
                     {"theta", theta}}
                    .dump(2)
             << "\n";
        return kExitOk;
    }
    out_ << verdict << "\n";
    if (o_.verbose) {
        out_ << "quotient order: " << r.quotient_order << "\n";
        out_ << "sylow subrack: " << format_set(r.sylow, r.quotient_order) << "\n";
        for (const auto& [atom, primes] : r.theta) {
            out_ << "theta(" << atom_label(atom, r.quotient_order) << ") = {";
            for (std::size_t i = 0; i < primes.size(); ++i)
                out_ << (i ? "," : "") << primes[i];
            out_ << "}\n";
        }
    }
    return kExitOk;
}

int Session::cycleforms()
{
    require_format({"text", "json"});
    const auto l = lattice_view();
    const int n = l->atom_count();
    require_centerless(*l);
    const auto pseudo = all_pseudo_cycle_forms(*l);
    const auto forms = o_.refined ? all_cycle_forms(*l, pseudo) : pseudo;

    std::vector<int> atoms;
    if (!o_.atom.empty()) {
        const bool numeric = std::all_of(o_.atom.begin(), o_.atom.end(), [](char c) { return std::isdigit(c); });
        const int a = numeric ? std::stoi(o_.atom) : parse_atom(o_.atom, n);
        if (a < 0 || a >= n)
            throw InputError("atom index out of range");
        atoms.push_back(a);
    } else {
        for (int a = 0; a < n; ++a)
            atoms.push_back(a);
    }

    if (json()) {
        Json a = Json::array();
        for (int x : atoms)
            a.push_back(cycle_form_to_json(x, forms[x]));
        out_ << (atoms.size() == 1 ? a.front() : a).dump() << "\n";
        return kExitOk;
    }
    for (int x : atoms) {
        if (atoms.size() > 1)
            out_ << atom_label(x, n) << ": ";
        out_ << format_partition(forms[x], n) << "\n";
    }
    return kExitOk;
}

int Session::verify()
{
    require_format({"text", "json"});
    VerificationReport r;
    if (!o_.group.empty())
        r.groups.push_back(verify_group(group(), mode(), o_.seed));
    else
        r = verify_catalog(o_.max_order, mode(), o_.seed);
    if (json())
        out_ << report_to_json(r, o_.verbose).dump(2) << "\n";
    else
        out_ << report_to_text(r, o_.verbose);
    return r.exit_code();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Subrack lattices of finite groups under conjugation", "subrack_cli"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--group", o.group, "catalog:<name> or a JSON group file");
    app.add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--mode", o.mode, "auto, explicit or implicit")
        ->check(CLI::IsMember({"auto", "explicit", "implicit"}));
    app.add_option("--seed", o.seed, "seed for sampled checks");
    app.add_flag("--verbose", o.verbose, "extra diagnostics");

    std::map<CLI::App*, int (Session::*)()> commands;
    commands[app.add_subcommand("catalog", "list the catalog groups")] = &Session::catalog;
    commands[app.add_subcommand("lattice", "enumerate and export the subrack lattice")] = &Session::lattice;
    commands[app.add_subcommand("invariants", "class sizes, center, A, N and M from the lattice")] =
        &Session::invariants;
    commands[app.add_subcommand("nilpotence", "nilpotence class from the lattice, with trace")] =
        &Session::nilpotence;
    auto* pnil = app.add_subcommand("pnilpotence", "normal p-complement from the lattice");
    pnil->add_option("--p", o.p, "prime")->required();
    commands[pnil] = &Session::pnilpotence;
    auto* cf = app.add_subcommand("cycleforms", "hypothetical cycle forms of a centerless group");
    cf->add_option("--atom", o.atom, "atom label or index");
    cf->add_flag("--refined", o.refined, "refine the pseudo cycle forms");
    commands[cf] = &Session::cycleforms;
    auto* ver = app.add_subcommand("verify", "cross-check lattice results against the group oracle");
    ver->add_option("--max-order", o.max_order, "largest catalog order to sweep");
    commands[ver] = &Session::verify;

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    Session session(o, out, err);
    try {
        for (const auto& [sub, run] : commands)
            if (sub->parsed())
                return (session.*run)();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " (try --mode implicit)\n";
        return kExitCapOrUndecided;
    } catch (const ConsistencyError& e) {
        err << "consistency failure: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitInputError;
}

}  // namespace subrack
