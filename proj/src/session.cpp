#include "rrlab/session.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rrlab/blowup.hpp"
#include "rrlab/criteria.hpp"
#include "rrlab/duality.hpp"
#include "rrlab/graded.hpp"
#include "rrlab/local.hpp"
#include "rrlab/ratliff_rush.hpp"

using nlohmann::json;

namespace rrlab {

namespace {

// Mirrors the default chain cap of rr_closure; reported under "bounds".
constexpr int kRRChainCap = 20;

struct VerbSig {
    int ideals = 0;  // leading arguments naming declared ideals
    int ints = 0;    // trailing integer arguments
};

const std::map<std::string, VerbSig>& verb_table() {
    static const std::map<std::string, VerbSig> t = {
        {"gb", {1, 0}},           {"tangent_cone", {1, 0}},
        {"ratliff_rush", {2, 0}}, {"rho", {2, 0}},
        {"depth", {1, 0}},        {"reg", {1, 0}},
        {"ext_piece", {1, 2}},    {"a_invariants", {1, 0}},
        {"rees", {2, 0}},         {"assoc_graded", {2, 0}},
        {"fiber_cone", {2, 0}},   {"depth_table", {2, 0}},
        {"check", {0, 0}},  // criterion name + 1 or 2 ideals, handled apart
    };
    return t;
}

// criterion name -> whether the check consumes a second ideal argument I.
const std::map<std::string, bool>& criteria_table() {
    static const std::map<std::string, bool> t = {
        {"xi_geq2", false},
        {"rho_bound", false},
        {"generalized_cm", false},
        {"marley_inequality", false},
        {"depth_positive_iff_rho_zero", true},
        {"huckaba_marley", true},
    };
    return t;
}

const std::set<std::string>& option_keys() {
    static const std::set<std::string> k = {"n_max", "koszul_cap", "power_cap", "seed"};
    return k;
}

long parse_signed(Lexer& lx) {
    bool neg = false;
    if (lx.peek().kind == Token::punct && lx.peek().text == "-") {
        lx.next();
        neg = true;
    }
    Token n = lx.expect_integer();
    long v = 0;
    try {
        v = std::stol(n.text);
    } catch (const std::exception&) {
        throw ParseError(n.line, n.col, "a representable integer", "'" + n.text + "'");
    }
    return neg ? -v : v;
}

// Run a constructor that validates its input, pinning failures to a script
// position.
template <class F>
auto at_position(int line, int col, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::exception& e) {
        throw ReferenceError(line, col, e.what());
    }
}

struct Env {
    std::map<std::string, const RingDecl*> rings;
    std::map<std::string, const IdealDecl*> ideals;
};

void check_unique(const Env& env, const Token& name) {
    if (env.rings.count(name.text) || env.ideals.count(name.text))
        throw ReferenceError(name.line, name.col, "duplicate name '" + name.text + "'");
}

const IdealDecl& resolve_ideal(const Env& env, const Command& c, const Arg& a) {
    if (a.kind != Arg::name)
        throw ReferenceError(c.line, c.col,
                             c.verb + ": expected the name of a declared ideal");
    auto it = env.ideals.find(a.text);
    if (it == env.ideals.end())
        throw ReferenceError(c.line, c.col, "unknown ideal '" + a.text + "'");
    return *it->second;
}

void check_command(const Command& c, const Env& env) {
    std::size_t n_ideals = 0, first_ideal = 0;
    if (c.verb == "check") {
        if (c.args.empty() || c.args[0].kind != Arg::name ||
            !criteria_table().count(c.args[0].text)) {
            std::string names;
            for (const auto& kv : criteria_table()) names += (names.empty() ? "" : ", ") + kv.first;
            throw ReferenceError(c.line, c.col,
                                 "check: first argument must be a criterion name (" + names + ")");
        }
        n_ideals = criteria_table().at(c.args[0].text) ? 2 : 1;
        first_ideal = 1;
        if (c.args.size() != first_ideal + n_ideals)
            throw ReferenceError(c.line, c.col,
                                 "check(" + c.args[0].text + ", ...): expected " +
                                     std::to_string(n_ideals) + " ideal argument(s)");
    } else {
        const VerbSig& sig = verb_table().at(c.verb);
        n_ideals = static_cast<std::size_t>(sig.ideals);
        if (c.args.size() != n_ideals + static_cast<std::size_t>(sig.ints))
            throw ReferenceError(c.line, c.col,
                                 c.verb + ": expected " +
                                     std::to_string(sig.ideals + sig.ints) + " argument(s)");
        for (std::size_t k = n_ideals; k < c.args.size(); ++k)
            if (c.args[k].kind != Arg::number)
                throw ReferenceError(c.line, c.col,
                                     c.verb + ": trailing arguments must be integers");
    }
    const RingPtr* common = nullptr;
    for (std::size_t k = first_ideal; k < first_ideal + n_ideals; ++k) {
        const IdealDecl& d = resolve_ideal(env, c, c.args[k]);
        if (common && !same_ring(*common, d.ring))
            throw ReferenceError(c.line, c.col,
                                 c.verb + ": ideals live in different rings");
        common = &d.ring;
    }
}

// ---------------------------------------------------------------------------
// printing

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += xs[i];
    }
    return s;
}

std::string command_text(const Command& c) {
    std::vector<std::string> parts;
    for (const auto& a : c.args)
        parts.push_back(a.kind == Arg::name ? a.text : std::to_string(a.value));
    for (const auto& [k, v] : c.opts) parts.push_back(k + " = " + std::to_string(v));
    return c.verb + "(" + join(parts, ", ") + ")";
}

// ---------------------------------------------------------------------------
// execution

std::vector<std::string> gb_strings(const Ideal& i) {
    std::vector<std::string> out;
    for (const auto& g : i.gb()) out.push_back(g.str());
    return out;
}

std::string ideal_text(const Ideal& i) {
    auto gs = gb_strings(i);
    return gs.empty() ? "0" : join(gs, ", ");
}

struct Eff {
    int n_max, koszul_cap, power_cap;
    long seed;
};

Eff effective(const SessionOptions& g, const Command& c) {
    Eff e{g.n_max, g.koszul_cap, g.power_cap, g.seed};
    for (const auto& [k, v] : c.opts) {
        if (k == "n_max") e.n_max = static_cast<int>(v);
        else if (k == "koszul_cap") e.koszul_cap = static_cast<int>(v);
        else if (k == "power_cap") e.power_cap = static_cast<int>(v);
        else if (k == "seed") e.seed = v;
    }
    return e;
}

LocalRing local_of(const IdealDecl& d) {
    return LocalRing(d.ring, Ideal(d.ring, d.gens));
}

Resolution cone_resolution(const LocalRing& a) {
    return minimal_resolution(cyclic_graded(tangent_cone(a)));
}

json betti_json(const BettiTable& t) {
    json rows = json::array();
    for (const auto& [key, count] : t.b)
        rows.push_back({{"stage", key.first}, {"twist", key.second}, {"count", count}});
    return rows;
}

// Betti numbers in the usual grid: column i = homological stage, row r holds
// the entries with twist = stage + r.
std::string betti_text(const BettiTable& t) {
    if (t.b.empty()) return "  betti: (zero module)\n";
    int rmin = 0, rmax = 0;
    bool first = true;
    for (const auto& [key, count] : t.b) {
        int r = key.second - key.first;
        rmin = first ? r : std::min(rmin, r);
        rmax = first ? r : std::max(rmax, r);
        first = false;
    }
    std::vector<std::size_t> width(static_cast<std::size_t>(t.pd) + 1);
    for (int i = 0; i <= t.pd; ++i) {
        width[static_cast<std::size_t>(i)] = std::to_string(i).size();
        for (int r = rmin; r <= rmax; ++r) {
            long c = t.at(i, i + r);
            if (c) width[static_cast<std::size_t>(i)] =
                       std::max(width[static_cast<std::size_t>(i)], std::to_string(c).size());
        }
    }
    std::ostringstream o;
    o << "  betti:\n       ";
    for (int i = 0; i <= t.pd; ++i)
        o << " " << std::string(width[static_cast<std::size_t>(i)] - std::to_string(i).size(), ' ')
          << i;
    o << "\n";
    for (int r = rmin; r <= rmax; ++r) {
        std::ostringstream label;
        label << r << ":";
        o << "  " << std::string(label.str().size() > 5 ? 0 : 5 - label.str().size(), ' ')
          << label.str();
        for (int i = 0; i <= t.pd; ++i) {
            long c = t.at(i, i + r);
            std::string cell = c ? std::to_string(c) : ".";
            o << " " << std::string(width[static_cast<std::size_t>(i)] - cell.size(), ' ') << cell;
        }
        o << "\n";
    }
    return o.str();
}

json opt_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

CriterionVerdict run_check(const std::string& name, const LocalRing& a,
                           const MPrimaryIdeal* i, const CriteriaOptions& copt) {
    if (name == "xi_geq2") return xi_geq2_criterion(a, copt);
    if (name == "rho_bound") return rho_bound_check(a, copt);
    if (name == "generalized_cm") return generalized_cm_check(a, copt);
    if (name == "marley_inequality") return marley_inequality_check(a, copt);
    if (name == "depth_positive_iff_rho_zero") return depth_positive_iff_rho_zero(a, *i, copt);
    return huckaba_marley_check(a, *i, copt);
}

// Run one command; returns the "result" object, appends detail lines to the
// human block, and may downgrade the status to "inconclusive".
json exec_command(const Command& c, const Env& env, const Eff& eff, std::ostream& human,
                  std::string& status) {
    json res = json::object();
    auto ideal_arg = [&](std::size_t k) -> const IdealDecl& {
        return resolve_ideal(env, c, c.args[k]);
    };

    if (c.verb == "gb") {
        const IdealDecl& d = ideal_arg(0);
        Ideal i(d.ring, d.gens);
        res["gens"] = gb_strings(i);
        human << "  gens = " << ideal_text(i) << "\n";
    } else if (c.verb == "tangent_cone") {
        LocalRing a = local_of(ideal_arg(0));
        Ideal qs = tangent_cone(a);
        res["q_star_gens"] = gb_strings(qs);
        human << "  q* = " << ideal_text(qs) << "\n";
    } else if (c.verb == "ratliff_rush") {
        LocalRing a = local_of(ideal_arg(0));
        MPrimaryIdeal i(a, ideal_arg(1).gens);
        RRReport r = rr_report(i, eff.n_max);
        res["rho"] = opt_int(r.rho);
        res["rho_exceeds_bound"] = r.rho_exceeds_bound;
        res["bounds"] = {{"n_max", r.n_max}, {"chain_cap", kRRChainCap}};
        res["seed"] = eff.seed;
        json table = json::array();
        for (const auto& row : r.table) {
            json gens = json::array();
            for (const auto& g : row.closure_gens) gens.push_back(g.str());
            table.push_back(
                {{"power", row.power}, {"defect", row.defect}, {"closure_gens", gens}});
        }
        res["table"] = table;
        if (r.rho) {
            human << "  rho = " << *r.rho << "\n";
        } else {
            human << "  rho: not stabilized within n_max = " << r.n_max << "\n";
            status = "inconclusive";
        }
        for (const auto& row : r.table)
            if (row.defect)
                human << "  n = " << row.power << ": defect " << row.defect << "\n";
    } else if (c.verb == "rho") {
        LocalRing a = local_of(ideal_arg(0));
        MPrimaryIdeal i(a, ideal_arg(1).gens);
        auto rho = rho_observed(i, eff.n_max);
        res["rho"] = opt_int(rho);
        res["n_max"] = eff.n_max;
        if (rho) {
            human << "  rho = " << *rho << "\n";
        } else {
            res["reason"] = "rho did not stabilize inside the window";
            human << "  rho: not stabilized within n_max = " << eff.n_max << "\n";
            status = "inconclusive";
        }
    } else if (c.verb == "depth") {
        LocalRing a = local_of(ideal_arg(0));
        res["depth"] = a.depth(eff.koszul_cap);
        human << "  depth = " << a.depth(eff.koszul_cap) << "\n";
    } else if (c.verb == "reg") {
        LocalRing a = local_of(ideal_arg(0));
        BettiTable t = betti_of(cone_resolution(a));
        res["reg"] = regularity_from_betti(t);
        res["pd"] = t.pd;
        res["betti"] = betti_json(t);
        human << "  reg = " << regularity_from_betti(t) << "\n" << betti_text(t);
    } else if (c.verb == "ext_piece") {
        LocalRing a = local_of(ideal_arg(0));
        int i = static_cast<int>(c.args[1].value);
        int d = static_cast<int>(c.args[2].value);
        Resolution r = cone_resolution(a);
        int dim = ext_graded_piece(r, i, d);
        res["i"] = i;
        res["d"] = d;
        res["dim"] = dim;
        human << "  dim Ext^" << i << "(G, R)_(" << d << ") = " << dim << "\n";
    } else if (c.verb == "a_invariants") {
        LocalRing a = local_of(ideal_arg(0));
        AInvariants ai = a_invariants(cone_resolution(a));
        json arr = json::array();
        std::vector<std::string> shown;
        for (const auto& v : ai.a) {
            arr.push_back(opt_int(v));
            shown.push_back(v ? std::to_string(*v) : "-inf");
        }
        res["a"] = arr;
        human << "  a = (" << join(shown, ", ") << ")\n";
    } else if (c.verb == "rees") {
        const IdealDecl& dq = ideal_arg(0);
        const IdealDecl& di = ideal_arg(1);
        LocalRing a = local_of(dq);
        BlowupPresentation b = rees_presentation(a, di.gens);
        res["vars"] = b.ambient->vars;
        res["rees_gens"] = gb_strings(b.rees_ideal);
        human << "  ring k[" << join(b.ambient->vars, ", ") << "]\n"
              << "  rees ideal = " << ideal_text(b.rees_ideal) << "\n";
    } else if (c.verb == "assoc_graded") {
        LocalRing a = local_of(ideal_arg(0));
        BlowupPresentation b = rees_presentation(a, ideal_arg(1).gens);
        Ideal g = assoc_graded_ideal(b, a);
        res["vars"] = g.ring()->vars;
        res["assoc_graded_gens"] = gb_strings(g);
        human << "  ring k[" << join(g.ring()->vars, ", ") << "]\n"
              << "  ideal = " << ideal_text(g) << "\n";
    } else if (c.verb == "fiber_cone") {
        LocalRing a = local_of(ideal_arg(0));
        BlowupPresentation b = rees_presentation(a, ideal_arg(1).gens);
        Ideal f = fiber_cone_ideal(b, a);
        res["vars"] = f.ring()->vars;
        res["fiber_gens"] = gb_strings(f);
        human << "  ring k[" << join(f.ring()->vars, ", ") << "]\n"
              << "  ideal = " << ideal_text(f) << "\n";
    } else if (c.verb == "depth_table") {
        LocalRing a = local_of(ideal_arg(0));
        MPrimaryIdeal i(a, ideal_arg(1).gens);
        DepthTableOptions o;
        o.l_max = eff.power_cap;
        o.koszul_cap = eff.koszul_cap;
        o.seed = static_cast<std::uint64_t>(eff.seed);
        json rows = json::array();
        bool exceeded = false;
        for (const auto& row : depth_table_powers(a, i, o)) {
            rows.push_back({{"power", row.power},
                            {"num_gens", row.num_gens},
                            {"depth_G", opt_int(row.depth_G)},
                            {"depth_F", opt_int(row.depth_F)},
                            {"budget_exceeded", row.budget_exceeded}});
            exceeded = exceeded || row.budget_exceeded;
            human << "  l = " << row.power << ": gens " << row.num_gens;
            if (row.depth_G) human << ", depth G = " << *row.depth_G;
            if (row.depth_F) human << ", depth F = " << *row.depth_F;
            if (row.budget_exceeded) human << "  (budget exceeded)";
            human << "\n";
        }
        res["rows"] = rows;
        if (exceeded) status = "inconclusive";
    } else {  // check
        const std::string& name = c.args[0].text;
        bool wants_i = criteria_table().at(name);
        LocalRing a = local_of(ideal_arg(1));
        std::optional<MPrimaryIdeal> i;
        if (wants_i) i.emplace(a, ideal_arg(2).gens);
        CriteriaOptions copt;
        copt.n_max = eff.n_max;
        copt.koszul_cap = eff.koszul_cap;
        copt.power_cap = eff.power_cap;
        copt.seed = static_cast<std::uint64_t>(eff.seed);
        CriterionVerdict v = run_check(name, a, i ? &*i : nullptr, copt);
        res = v.to_json();
        if (v.verdict == Verdict::INCONCLUSIVE) status = "inconclusive";
        human << "  verdict: " << verdict_name(v.verdict) << "\n"
              << "  evidence: " << v.evidence.dump() << "\n";
    }
    return res;
}

struct CommandResult {
    json line;
    std::string human;
    bool error = false;
    bool inconclusive = false;
};

CommandResult run_one(int index, const Command& c, const Env& env, const SessionOptions& g) {
    CommandResult out;
    json line;
    line["index"] = index;
    line["verb"] = c.verb;
    json args = json::array();
    for (const auto& a : c.args)
        a.kind == Arg::name ? args.push_back(a.text) : args.push_back(a.value);
    line["args"] = args;
    if (!c.opts.empty()) line["opts"] = c.opts;
    std::ostringstream human;
    human << "[" << index << "] " << command_text(c) << "\n";
    std::string status = "ok";
    try {
        line["result"] = exec_command(c, env, effective(g, c), human, status);
    } catch (const std::exception& e) {
        status = "error";
        line["error"] = e.what();
        human << "  error: " << e.what() << "\n";
        out.error = true;
    }
    line["status"] = status;
    out.inconclusive = status == "inconclusive";
    out.line = std::move(line);
    out.human = human.str();
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// parsing

SessionScript parse_session(const std::string& text) {
    Lexer lx(text);
    SessionScript s;
    Env env;
    RingPtr current;
    while (lx.peek().kind != Token::eof) {
        const Token& head = lx.peek();
        if (head.kind != Token::ident) lx.fail("a declaration or command");
        if (head.text == "ring") {
            lx.next();
            Token name = lx.expect_ident();
            check_unique(env, name);
            lx.expect_punct("=");
            Token f = lx.expect_ident();
            RingDecl decl;
            decl.name = name.text;
            if (f.text == "QQ") {
                decl.rationals = true;
            } else if (f.text == "Fp") {
                lx.expect_punct("(");
                Token p = lx.expect_integer();
                lx.expect_punct(")");
                decl.rationals = false;
                try {
                    decl.p = std::stol(p.text);
                } catch (const std::exception&) {
                    throw ParseError(p.line, p.col, "a representable prime", "'" + p.text + "'");
                }
            } else {
                throw ParseError(f.line, f.col, "'QQ' or 'Fp'", f.describe());
            }
            lx.expect_punct("[");
            decl.vars.push_back(lx.expect_ident().text);
            while (lx.peek().kind == Token::punct && lx.peek().text == ",") {
                lx.next();
                Token v = lx.expect_ident();
                if (std::find(decl.vars.begin(), decl.vars.end(), v.text) != decl.vars.end())
                    throw ReferenceError(v.line, v.col, "duplicate variable '" + v.text + "'");
                decl.vars.push_back(v.text);
            }
            lx.expect_punct("]");
            lx.expect_punct(";");
            decl.ring = at_position(name.line, name.col, [&] {
                Field k = decl.rationals
                              ? Field::rationals()
                              : Field::prime(static_cast<std::uint32_t>(decl.p));
                return Ring::make(k, decl.vars);
            });
            current = decl.ring;
            Statement st;
            st.kind = Statement::ring_decl;
            st.ring = decl;
            s.stmts.push_back(std::move(st));
        } else if (head.text == "ideal") {
            Token kw = lx.next();
            Token name = lx.expect_ident();
            check_unique(env, name);
            if (!current)
                throw ReferenceError(kw.line, kw.col, "ideal declared before any ring");
            lx.expect_punct("=");
            IdealDecl decl;
            decl.name = name.text;
            decl.ring = current;
            decl.gens.push_back(parse_poly_expr(lx, current));
            while (lx.peek().kind == Token::punct && lx.peek().text == ",") {
                lx.next();
                decl.gens.push_back(parse_poly_expr(lx, current));
            }
            lx.expect_punct(";");
            Statement st;
            st.kind = Statement::ideal_decl;
            st.ideal = std::move(decl);
            s.stmts.push_back(std::move(st));
        } else {
            Token verb = lx.next();
            if (!verb_table().count(verb.text))
                throw ParseError(verb.line, verb.col, "a command verb", verb.describe());
            Command c;
            c.verb = verb.text;
            c.line = verb.line;
            c.col = verb.col;
            lx.expect_punct("(");
            if (!(lx.peek().kind == Token::punct && lx.peek().text == ")")) {
                for (;;) {
                    if (lx.peek().kind == Token::ident) {
                        Token a = lx.next();
                        if (lx.peek().kind == Token::punct && lx.peek().text == "=") {
                            lx.next();
                            if (!option_keys().count(a.text))
                                throw ReferenceError(a.line, a.col,
                                                     "unknown option '" + a.text + "'");
                            if (c.opts.count(a.text))
                                throw ReferenceError(a.line, a.col,
                                                     "option '" + a.text + "' given twice");
                            c.opts[a.text] = parse_signed(lx);
                        } else {
                            Arg arg;
                            arg.kind = Arg::name;
                            arg.text = a.text;
                            c.args.push_back(arg);
                        }
                    } else if (lx.peek().kind == Token::integer ||
                               (lx.peek().kind == Token::punct && lx.peek().text == "-")) {
                        Arg arg;
                        arg.kind = Arg::number;
                        arg.value = parse_signed(lx);
                        c.args.push_back(arg);
                    } else {
                        lx.fail("an argument");
                    }
                    if (lx.peek().kind == Token::punct && lx.peek().text == ",") {
                        lx.next();
                        continue;
                    }
                    break;
                }
            }
            lx.expect_punct(")");
            lx.expect_punct(";");
            check_command(c, env);
            Statement st;
            st.kind = Statement::command;
            st.cmd = std::move(c);
            s.stmts.push_back(std::move(st));
        }
        // refresh the lookup maps: stmts may have reallocated
        env.rings.clear();
        env.ideals.clear();
        for (const auto& st : s.stmts) {
            if (st.kind == Statement::ring_decl) env.rings[st.ring.name] = &st.ring;
            if (st.kind == Statement::ideal_decl) env.ideals[st.ideal.name] = &st.ideal;
        }
    }
    return s;
}

std::string print_session(const SessionScript& s) {
    std::ostringstream o;
    for (const auto& st : s.stmts) {
        switch (st.kind) {
        case Statement::ring_decl:
            o << "ring " << st.ring.name << " = "
              << (st.ring.rationals ? std::string("QQ")
                                    : "Fp(" + std::to_string(st.ring.p) + ")")
              << "[" << join(st.ring.vars, ", ") << "];\n";
            break;
        case Statement::ideal_decl: {
            std::vector<std::string> gs;
            for (const auto& g : st.ideal.gens) gs.push_back(g.str());
            o << "ideal " << st.ideal.name << " = " << join(gs, ", ") << ";\n";
            break;
        }
        case Statement::command:
            o << command_text(st.cmd) << ";\n";
            break;
        }
    }
    return o.str();
}

// ---------------------------------------------------------------------------
// running

SessionSummary run_session(const SessionScript& s, const SessionOptions& opt,
                           std::ostream& human, std::ostream* jsonl) {
    Env env;
    std::vector<const Command*> cmds;
    for (const auto& st : s.stmts) {
        if (st.kind == Statement::ring_decl) env.rings[st.ring.name] = &st.ring;
        if (st.kind == Statement::ideal_decl) env.ideals[st.ideal.name] = &st.ideal;
        if (st.kind == Statement::command) cmds.push_back(&st.cmd);
    }
    std::vector<CommandResult> results(cmds.size());
    bool par = opt.parallel && !opt.fail_fast && cmds.size() > 1;
    int ran = static_cast<int>(cmds.size());
    if (par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
        for (int k = 0; k < static_cast<int>(cmds.size()); ++k)
            results[static_cast<std::size_t>(k)] = run_one(k, *cmds[static_cast<std::size_t>(k)], env, opt);
    } else {
        for (int k = 0; k < static_cast<int>(cmds.size()); ++k) {
            results[static_cast<std::size_t>(k)] = run_one(k, *cmds[static_cast<std::size_t>(k)], env, opt);
            if (results[static_cast<std::size_t>(k)].error && opt.fail_fast) {
                ran = k + 1;
                break;
            }
        }
    }
    SessionSummary sum;
    for (int k = 0; k < ran; ++k) {
        const CommandResult& r = results[static_cast<std::size_t>(k)];
        human << r.human;
        if (jsonl) *jsonl << r.line.dump() << "\n";
        ++sum.commands;
        if (r.error) ++sum.errors;
        if (r.inconclusive) ++sum.inconclusive;
    }
    sum.exit_code = sum.errors ? 1 : 0;
    return sum;
}

}  // namespace rrlab
