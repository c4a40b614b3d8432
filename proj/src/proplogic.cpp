#include "dpers/proplogic.hpp"

#include <algorithm>
#include <cctype>

#include "cursor.hpp"
#include "dpers/errors.hpp"
#include "parse_detail.hpp"

namespace dpers {

struct Formula::Node {
    Kind kind;
    std::string name;
    std::vector<Formula> children;
};

bool is_identifier(std::string_view name) {
    if (name.empty()) return false;
    auto c0 = static_cast<unsigned char>(name.front());
    if (!std::isalpha(c0) && name.front() != '_') return false;
    return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Formula::Formula() : node_(std::make_shared<const Node>(Node{Kind::Top, {}, {}})) {}

Formula Formula::top() { return Formula(); }

Formula Formula::bottom() { return Formula(std::make_shared<const Node>(Node{Kind::Bottom, {}, {}})); }

Formula Formula::atom(std::string name) {
    if (!is_identifier(name)) throw DomainError("invalid atom name: '" + name + "'");
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula operator!(const Formula& f) {
    return Formula(std::make_shared<const Formula::Node>(Formula::Node{Formula::Kind::Not, {}, {f}}));
}

Formula operator&(const Formula& a, const Formula& b) {
    return Formula(std::make_shared<const Formula::Node>(Formula::Node{Formula::Kind::And, {}, {a, b}}));
}

Formula operator|(const Formula& a, const Formula& b) {
    return Formula(std::make_shared<const Formula::Node>(Formula::Node{Formula::Kind::Or, {}, {a, b}}));
}

Formula implies(const Formula& a, const Formula& b) { return (!a) | b; }

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::name() const noexcept { return node_->name; }

std::span<const Formula> Formula::children() const noexcept { return node_->children; }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.name() != b.name()) return false;
    auto ca = a.children();
    auto cb = b.children();
    return std::equal(ca.begin(), ca.end(), cb.begin(), cb.end());
}

bool structural_less(const Formula& a, const Formula& b) {
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.name() != b.name()) return a.name() < b.name();
    auto ca = a.children();
    auto cb = b.children();
    for (std::size_t i = 0; i < ca.size() && i < cb.size(); ++i) {
        if (structural_less(ca[i], cb[i])) return true;
        if (structural_less(cb[i], ca[i])) return false;
    }
    return ca.size() < cb.size();
}

namespace {

void collect_atoms(const Formula& f, std::set<Atom>& out) {
    if (f.is_atomic()) {
        out.insert(f.name());
        return;
    }
    for (const auto& c : f.children()) collect_atoms(c, out);
}

}  // namespace

std::set<Atom> atoms(const Formula& f) {
    std::set<Atom> out;
    collect_atoms(f, out);
    return out;
}

std::set<Atom> vocabulary(std::span<const Formula> formulas) {
    std::set<Atom> out;
    for (const auto& f : formulas) collect_atoms(f, out);
    return out;
}

// --- parsing --------------------------------------------------------------

namespace detail {

namespace {

Formula parse_implication(Cursor& in);

Formula parse_unary(Cursor& in) {
    if (in.accept("!")) return !parse_unary(in);
    if (in.accept("(")) {
        Formula inner = parse_implication(in);
        in.expect(")");
        return inner;
    }
    auto id = in.identifier();
    if (id.empty()) in.fail("expected formula");
    if (id == "true") return Formula::top();
    if (id == "false") return Formula::bottom();
    return Formula::atom(std::string(id));
}

Formula parse_conjunction(Cursor& in) {
    Formula lhs = parse_unary(in);
    while (in.accept("&")) lhs = lhs & parse_unary(in);
    return lhs;
}

Formula parse_disjunction(Cursor& in) {
    Formula lhs = parse_conjunction(in);
    while (in.accept("|")) lhs = lhs | parse_conjunction(in);
    return lhs;
}

Formula parse_implication(Cursor& in) {
    Formula lhs = parse_disjunction(in);
    if (in.accept("->")) return implies(lhs, parse_implication(in));
    return lhs;
}

}  // namespace

Formula parse_formula(Cursor& in) { return parse_implication(in); }

}  // namespace detail

Formula parse_formula(std::string_view text) {
    detail::Cursor in(text);
    Formula f = detail::parse_formula(in);
    if (!in.at_end()) in.fail("unexpected trailing input");
    return f;
}

namespace {

int precedence(Formula::Kind k) {
    switch (k) {
        case Formula::Kind::Or: return 1;
        case Formula::Kind::And: return 2;
        default: return 3;
    }
}

void render_into(const Formula& f, std::string& out) {
    auto child = [&out](const Formula& c, bool parens) {
        if (parens) out += '(';
        render_into(c, out);
        if (parens) out += ')';
    };
    switch (f.kind()) {
        case Formula::Kind::Top: out += "true"; return;
        case Formula::Kind::Bottom: out += "false"; return;
        case Formula::Kind::Atom: out += f.name(); return;
        case Formula::Kind::Not:
            out += '!';
            child(f.children()[0], precedence(f.children()[0].kind()) < 3);
            return;
        case Formula::Kind::And:
        case Formula::Kind::Or: {
            int p = precedence(f.kind());
            const auto& l = f.children()[0];
            const auto& r = f.children()[1];
            child(l, precedence(l.kind()) < p);
            out += f.kind() == Formula::Kind::And ? " & " : " | ";
            child(r, precedence(r.kind()) <= p);
            return;
        }
    }
}

}  // namespace

std::string render(const Formula& f) {
    std::string out;
    render_into(f, out);
    return out;
}

// --- semantics ------------------------------------------------------------

bool Interpretation::at(const Atom& atom) const {
    auto it = values_.find(atom);
    if (it == values_.end()) throw VocabularyError("atom '" + atom + "' outside interpretation vocabulary");
    return it->second;
}

bool evaluate(const Interpretation& omega, const Formula& phi) {
    switch (phi.kind()) {
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bottom: return false;
        case Formula::Kind::Atom: return omega.at(phi.name());
        case Formula::Kind::Not: return !evaluate(omega, phi.children()[0]);
        case Formula::Kind::And:
            return evaluate(omega, phi.children()[0]) && evaluate(omega, phi.children()[1]);
        case Formula::Kind::Or:
            return evaluate(omega, phi.children()[0]) || evaluate(omega, phi.children()[1]);
    }
    return false;
}

ModelSpace::ModelSpace(const std::set<Atom>& vocabulary) : atoms_(vocabulary.begin(), vocabulary.end()) {
    if (atoms_.size() > max_atoms)
        throw DomainError("model enumeration limited to " + std::to_string(max_atoms) + " atoms, got " +
                          std::to_string(atoms_.size()));
}

Interpretation ModelSpace::interpretation(std::uint64_t mask) const {
    std::map<Atom, bool> values;
    for (std::size_t i = 0; i < atoms_.size(); ++i) values.emplace(atoms_[i], ((mask >> i) & 1U) != 0);
    return Interpretation(std::move(values));
}

int ModelSpace::index_of(const Atom& atom) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
    if (it == atoms_.end() || *it != atom) return -1;
    return static_cast<int>(it - atoms_.begin());
}

CompiledFormula::CompiledFormula(const Formula& f, const ModelSpace& space) {
    auto emit = [&](auto&& self, const Formula& g) -> void {
        switch (g.kind()) {
            case Formula::Kind::Top: code_.push_back({Op::True, 0}); return;
            case Formula::Kind::Bottom: code_.push_back({Op::False, 0}); return;
            case Formula::Kind::Atom: {
                int idx = space.index_of(g.name());
                if (idx < 0) throw VocabularyError("atom '" + g.name() + "' outside model space");
                code_.push_back({Op::Var, idx});
                return;
            }
            case Formula::Kind::Not:
                self(self, g.children()[0]);
                code_.push_back({Op::Not, 0});
                return;
            case Formula::Kind::And:
            case Formula::Kind::Or:
                self(self, g.children()[0]);
                self(self, g.children()[1]);
                code_.push_back({g.kind() == Formula::Kind::And ? Op::And : Op::Or, 0});
                return;
        }
    };
    emit(emit, f);
}

bool CompiledFormula::eval(std::uint64_t mask) const {
    // Stack depth is bounded by the formula height; small vector suffices.
    std::vector<bool> stack;
    stack.reserve(code_.size());
    for (const auto& ins : code_) {
        switch (ins.op) {
            case Op::True: stack.push_back(true); break;
            case Op::False: stack.push_back(false); break;
            case Op::Var: stack.push_back(((mask >> ins.var) & 1U) != 0); break;
            case Op::Not: stack.back() = !stack.back(); break;
            case Op::And: {
                bool r = stack.back();
                stack.pop_back();
                stack.back() = stack.back() && r;
                break;
            }
            case Op::Or: {
                bool r = stack.back();
                stack.pop_back();
                stack.back() = stack.back() || r;
                break;
            }
        }
    }
    return stack.back();
}

namespace {

std::vector<CompiledFormula> compile_all(std::span<const Formula> gamma, const ModelSpace& space) {
    std::vector<CompiledFormula> out;
    out.reserve(gamma.size());
    for (const auto& g : gamma) out.emplace_back(g, space);
    return out;
}

bool satisfies_all(const std::vector<CompiledFormula>& gamma, std::uint64_t mask) {
    return std::all_of(gamma.begin(), gamma.end(), [mask](const auto& g) { return g.eval(mask); });
}

}  // namespace

bool satisfiable(std::span<const Formula> gamma) {
    ModelSpace space(vocabulary(gamma));
    auto compiled = compile_all(gamma, space);
    for (std::uint64_t m = 0; m < space.size(); ++m)
        if (satisfies_all(compiled, m)) return true;
    return false;
}

bool entails(std::span<const Formula> gamma, const Formula& phi) {
    auto vocab = vocabulary(gamma);
    vocab.merge(atoms(phi));
    ModelSpace space(vocab);
    auto compiled = compile_all(gamma, space);
    CompiledFormula goal(phi, space);
    for (std::uint64_t m = 0; m < space.size(); ++m)
        if (satisfies_all(compiled, m) && !goal.eval(m)) return false;
    return true;
}

bool is_tautology(const Formula& phi) { return entails({}, phi); }

bool is_contradiction(const Formula& phi) { return !satisfiable(std::span(&phi, 1)); }

std::string to_string(BeliefStatus status) {
    switch (status) {
        case BeliefStatus::True: return "True";
        case BeliefStatus::False: return "False";
        case BeliefStatus::Unknown: return "Unknown";
        case BeliefStatus::Inconsistent: return "Inconsistent";
    }
    return "?";
}

BeliefStatus belief_status(std::span<const Formula> gamma, const Formula& phi) {
    if (!satisfiable(gamma)) return BeliefStatus::Inconsistent;
    if (entails(gamma, phi)) return BeliefStatus::True;
    if (entails(gamma, !phi)) return BeliefStatus::False;
    return BeliefStatus::Unknown;
}

}  // namespace dpers
