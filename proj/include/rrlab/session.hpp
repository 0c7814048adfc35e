#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrlab/ideal.hpp"
#include "rrlab/text.hpp"

namespace rrlab {

// Name-resolution or validation failure in a script that tokenized and
// parsed structurally: unknown names, duplicate declarations, arity or ring
// mismatches.  Kept apart from ParseError so the front end can label the two
// classes differently; both map to the parse-failure exit status.
struct ReferenceError : std::runtime_error {
    ReferenceError(int line_, int col_, const std::string& msg)
        : std::runtime_error(msg), line(line_), col(col_) {}
    int line, col;
};

// One positional argument of a command: the name of a declared ideal (or,
// for check, a criterion name) or an integer literal.
struct Arg {
    enum Kind { name, number };
    Kind kind = name;
    std::string text;
    long value = 0;
};

struct RingDecl {
    std::string name;
    bool rationals = true;
    long p = 0;  // characteristic when not rationals
    std::vector<std::string> vars;
    RingPtr ring;
};

// An ideal declaration binds to the most recently declared ring.
struct IdealDecl {
    std::string name;
    RingPtr ring;
    std::vector<Poly> gens;
};

// Command with optional per-command overrides of the session bounds, written
// as trailing `key = value` arguments (keys: n_max, koszul_cap, power_cap,
// seed).
struct Command {
    std::string verb;
    std::vector<Arg> args;
    std::map<std::string, long> opts;
    int line = 0, col = 0;
};

struct Statement {
    enum Kind { ring_decl, ideal_decl, command };
    Kind kind = command;
    RingDecl ring;
    IdealDecl ideal;
    Command cmd;
};

struct SessionScript {
    std::vector<Statement> stmts;
    bool empty() const { return stmts.empty(); }
};

// Parse and fully resolve a script: grammar errors throw ParseError,
// name/arity/ring errors throw ReferenceError.  Declarations must precede
// use and all names (rings and ideals) share one namespace.
SessionScript parse_session(const std::string& text);

// Canonical text of a script; parse(print_session(parse(text))) reproduces
// the same script, so printing is a fixed point of the round trip.
std::string print_session(const SessionScript& s);

struct SessionOptions {
    int n_max = 12;      // Ratliff-Rush closure window
    int koszul_cap = 8;  // largest Koszul complex taken head-on
    int power_cap = 4;   // depth-table rows l = 1..power_cap
    long seed = 0;       // seed for generic-form searches
    bool fail_fast = false;
    bool parallel = false;
};

struct SessionSummary {
    int exit_code = 0;  // 0 clean, 1 when some command errored
    int commands = 0;
    int errors = 0;
    int inconclusive = 0;  // commands whose answer hit a window or budget
};

// Execute every command in order.  Each command writes a human-readable
// block to `human` and, when `jsonl` is non-null, one JSON object per line.
// A command failure is recorded and execution continues unless fail_fast;
// inconclusive outcomes (unstabilized windows, exhausted budgets, criterion
// verdict INCONCLUSIVE) never fail the session but are counted separately.
// With `parallel`, independent commands may run concurrently; output order
// stays by command index either way.
SessionSummary run_session(const SessionScript& s, const SessionOptions& opt,
                           std::ostream& human, std::ostream* jsonl);

}  // namespace rrlab
