#include "netgames/gamefile.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace netgames {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void raise(ErrorCode code, std::string path, std::string message) {
    throw GameFileError({Diagnostic{code, 0, 0, std::move(path), std::move(message)}});
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        Diagnostic d{ErrorCode::Syntax, 1, 1, "", e.what()};
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++d.line;
                d.column = 1;
            } else {
                ++d.column;
            }
        }
        throw GameFileError({d});
    }
}

// Typed access with schema errors naming the offending JSON pointer.
class Reader {
public:
    static const json& field(const json& obj, const std::string& path, const char* name) {
        const auto it = obj.find(name);
        if (it == obj.end()) raise(ErrorCode::Schema, path, std::string("missing field '") + name + "'");
        return *it;
    }
    static const json* optional(const json& obj, const char* name) {
        const auto it = obj.find(name);
        return it == obj.end() || it->is_null() ? nullptr : &*it;
    }
    static const json& object(const json& v, const std::string& path) {
        if (!v.is_object()) raise(ErrorCode::Schema, path, "expected an object");
        return v;
    }
    static const json& array(const json& v, const std::string& path) {
        if (!v.is_array()) raise(ErrorCode::Schema, path, "expected an array");
        return v;
    }
    static std::string string(const json& v, const std::string& path) {
        if (!v.is_string()) raise(ErrorCode::Schema, path, "expected a string");
        return v.get<std::string>();
    }
    static bool boolean(const json& v, const std::string& path) {
        if (!v.is_boolean()) raise(ErrorCode::Schema, path, "expected true or false");
        return v.get<bool>();
    }
    static std::uint64_t uint(const json& v, const std::string& path) {
        if (!v.is_number_unsigned()) raise(ErrorCode::Schema, path, "expected a non-negative integer");
        return v.get<std::uint64_t>();
    }
};

std::string item(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }
std::string at(const std::string& path, const char* name) { return path + "/" + name; }

json load_document(std::string_view text) {
    json root = parse_json(text);
    Reader::object(root, "");
    const auto it = root.find("version");
    if (it == root.end()) raise(ErrorCode::Version, "/version", "missing format version");
    const json& version = *it;
    if (!version.is_number_integer() || version.get<long long>() != kFormatVersion)
        raise(ErrorCode::Version, "/version", "unsupported format version " + version.dump() + ", expected " +
                                                  std::to_string(kFormatVersion));
    return root;
}

Objective parse_objective(const json& v, const std::string& path) {
    const auto s = Reader::string(v, path);
    if (s == "safety") return Objective::Safety;
    if (s == "reachability") return Objective::Reachability;
    raise(ErrorCode::Schema, path, "objective must be \"safety\" or \"reachability\"");
}

Actor parse_actor(const json& v, const std::string& path) {
    const auto s = Reader::string(v, path);
    if (s == "destructor") return Actor::Destructor;
    if (s == "constructor") return Actor::Constructor;
    raise(ErrorCode::Schema, path, "player must be \"destructor\" or \"constructor\"");
}

// Writes a top-level object with one field per line and array elements
// one per line, each element compact.
class DocumentWriter {
public:
    void scalar(const std::string& name, const ordered_json& value) { fields_.push_back({name, value.dump()}); }
    void inline_array(const std::string& name, const ordered_json& value) { scalar(name, value); }
    void array(const std::string& name, const std::vector<ordered_json>& items) {
        std::string body;
        if (items.empty()) {
            body = "[]";
        } else {
            body = "[\n";
            for (std::size_t i = 0; i < items.size(); ++i)
                body += "    " + items[i].dump() + (i + 1 < items.size() ? ",\n" : "\n");
            body += "  ]";
        }
        fields_.push_back({name, body});
    }
    std::string str() const {
        std::string out = "{\n";
        for (std::size_t i = 0; i < fields_.size(); ++i)
            out += "  " + ordered_json(fields_[i].name).dump() + ": " + fields_[i].body +
                   (i + 1 < fields_.size() ? ",\n" : "\n");
        return out + "}\n";
    }

private:
    struct Field {
        std::string name;
        std::string body;
    };
    std::vector<Field> fields_;
};

// Label lookup that records unknown labels instead of failing at once.
class LabelTable {
public:
    LabelTable(const Alphabet& alphabet, std::vector<Diagnostic>& errors) : alphabet_(alphabet), errors_(errors) {}

    LabelId operator()(const json& v, const std::string& path) {
        const auto name = Reader::string(v, path);
        if (auto id = alphabet_.find(name)) return *id;
        errors_.push_back({ErrorCode::UnknownLabel, 0, 0, path, "unknown label '" + name + "'"});
        return kBlank;
    }

private:
    const Alphabet& alphabet_;
    std::vector<Diagnostic>& errors_;
};

Rule parse_rule(const json& r, const std::string& path, LabelTable& label, std::vector<Diagnostic>& errors) {
    Reader::object(r, path);
    const auto kind = Reader::string(Reader::field(r, path, "kind"), at(path, "kind"));
    if (kind == "move") {
        return MoveRule{label(Reader::field(r, path, "from"), at(path, "from")),
                        label(Reader::field(r, path, "to"), at(path, "to"))};
    }
    if (kind == "relabel") {
        RelabelRule rule;
        const auto steps_path = at(path, "steps");
        const auto& steps = Reader::array(Reader::field(r, path, "steps"), steps_path);
        for (std::size_t i = 0; i < steps.size(); ++i) {
            const auto sp = item(steps_path, i);
            const auto& s = Reader::array(steps[i], sp);
            if (s.size() != 4) raise(ErrorCode::Schema, sp, "a relabel step lists four labels: from_u, from_v, to_u, to_v");
            rule.steps.push_back(RelabelStep{label(s[0], item(sp, 0)), label(s[1], item(sp, 1)), label(s[2], item(sp, 2)),
                                             label(s[3], item(sp, 3))});
        }
        if (rule.steps.empty()) errors.push_back({ErrorCode::InvalidRule, 0, 0, steps_path, "relabel rule without steps"});
        return rule;
    }
    if (kind == "create") {
        CreateRule rule;
        auto labels = [&](const char* name) {
            std::vector<LabelId> out;
            const auto p = at(path, name);
            const auto& a = Reader::array(Reader::field(r, path, name), p);
            for (std::size_t i = 0; i < a.size(); ++i) out.push_back(label(a[i], item(p, i)));
            return out;
        };
        rule.required = labels("require");
        rule.rewritten = labels("rewrite");
        rule.created = label(Reader::field(r, path, "label"), at(path, "label"));
        if (const json* s = Reader::optional(r, "strong")) rule.strong = Reader::boolean(*s, at(path, "strong"));
        if (rule.required.empty())
            errors.push_back({ErrorCode::InvalidRule, 0, 0, at(path, "require"), "create rule needs at least one node"});
        if (rule.required.size() != rule.rewritten.size())
            errors.push_back({ErrorCode::InvalidRule, 0, 0, at(path, "rewrite"), "require and rewrite differ in length"});
        return rule;
    }
    raise(ErrorCode::Schema, at(path, "kind"), "rule kind must be move, relabel or create");
}

ordered_json rule_json(const Rule& rule, const Alphabet& a) {
    ordered_json out;
    if (const auto* m = std::get_if<MoveRule>(&rule)) {
        out["kind"] = "move";
        out["from"] = a.name(m->from);
        out["to"] = a.name(m->to);
    } else if (const auto* r = std::get_if<RelabelRule>(&rule)) {
        out["kind"] = "relabel";
        out["steps"] = ordered_json::array();
        for (const auto& s : r->steps)
            out["steps"].push_back({a.name(s.from_u), a.name(s.from_v), a.name(s.to_u), a.name(s.to_v)});
    } else {
        const auto& c = std::get<CreateRule>(rule);
        out["kind"] = "create";
        out["strong"] = c.strong;
        out["require"] = ordered_json::array();
        for (auto l : c.required) out["require"].push_back(a.name(l));
        out["rewrite"] = ordered_json::array();
        for (auto l : c.rewritten) out["rewrite"].push_back(a.name(l));
        out["label"] = a.name(c.created);
    }
    return out;
}

std::string kind_name(MoveKind k) {
    switch (k) {
    case MoveKind::Delete: return "delete";
    case MoveKind::Apply: return "apply";
    case MoveKind::Skip: return "skip";
    }
    return "skip";
}

ordered_json move_json(const HalfMove& m) {
    ordered_json out;
    out["kind"] = kind_name(m.kind);
    if (m.kind == MoveKind::Delete) out["target"] = to_index(m.target);
    if (m.kind == MoveKind::Apply) {
        out["rule"] = m.rule;
        out["binding"] = ordered_json::array();
        for (auto v : m.binding) out["binding"].push_back(to_index(v));
    }
    return out;
}

HalfMove parse_move(const json& v, const std::string& path, Actor actor) {
    Reader::object(v, path);
    const auto kind = Reader::string(Reader::field(v, path, "kind"), at(path, "kind"));
    auto vertex = [](const json& x, const std::string& p) {
        const auto i = Reader::uint(x, p);
        if (i > UINT32_MAX) raise(ErrorCode::Schema, p, "vertex index out of range");
        return VertexId{static_cast<std::uint32_t>(i)};
    };
    if (kind == "skip") return HalfMove::skip(actor);
    if (kind == "delete") {
        HalfMove m = HalfMove::remove(vertex(Reader::field(v, path, "target"), at(path, "target")));
        m.actor = actor;
        return m;
    }
    if (kind == "apply") {
        const auto rule = Reader::uint(Reader::field(v, path, "rule"), at(path, "rule"));
        std::vector<VertexId> binding;
        const auto bp = at(path, "binding");
        const auto& b = Reader::array(Reader::field(v, path, "binding"), bp);
        for (std::size_t i = 0; i < b.size(); ++i) binding.push_back(vertex(b[i], item(bp, i)));
        HalfMove m = HalfMove::apply(static_cast<std::size_t>(rule), std::move(binding));
        m.actor = actor;
        return m;
    }
    raise(ErrorCode::Schema, at(path, "kind"), "move kind must be delete, apply or skip");
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string dot_quote(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

std::vector<std::string> string_list(const json& v, const std::string& path) {
    std::vector<std::string> out;
    const auto& a = Reader::array(v, path);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(Reader::string(a[i], item(path, i)));
    return out;
}

}  // namespace

std::string to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::Schema: return "schema";
    case ErrorCode::Version: return "version mismatch";
    case ErrorCode::UnknownLabel: return "unknown label";
    case ErrorCode::DuplicateId: return "duplicate id";
    case ErrorCode::UnknownNode: return "unknown node";
    case ErrorCode::InvalidNetwork: return "invalid network";
    case ErrorCode::InvalidRule: return "invalid rule";
    case ErrorCode::ObjectivePrecondition: return "objective precondition";
    case ErrorCode::MalformedKey: return "malformed key";
    case ErrorCode::DanglingKey: return "dangling key";
    case ErrorCode::InvalidSpec: return "invalid spec";
    case ErrorCode::Io: return "io";
    }
    return "unknown";
}

std::string format(const Diagnostic& d) {
    std::string out = to_string(d.code);
    if (d.line > 0) out += " at " + std::to_string(d.line) + ":" + std::to_string(d.column);
    if (!d.path.empty()) out += " at " + d.path;
    return out + ": " + d.message;
}

GameFileError::GameFileError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "file error" : format(diagnostics.front())),
      diagnostics_(std::move(diagnostics)) {
    if (diagnostics_.empty()) diagnostics_.push_back({ErrorCode::Schema, 0, 0, "", "file error"});
}

Game parse_game(std::string_view text) {
    const json root = load_document(text);
    std::vector<Diagnostic> errors;
    Game game;
    game.objective = parse_objective(Reader::field(root, "", "objective"), "/objective");

    const auto labels = string_list(Reader::field(root, "", "alphabet"), "/alphabet");
    if (labels.empty() || labels.front() != kBlankName)
        raise(ErrorCode::Schema, "/alphabet", "the alphabet starts with the blank label \"_\"");
    std::set<std::string> seen_labels;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty()) raise(ErrorCode::Schema, item("/alphabet", i), "empty label");
        if (!seen_labels.insert(labels[i]).second)
            errors.push_back({ErrorCode::DuplicateId, 0, 0, item("/alphabet", i), "duplicate label '" + labels[i] + "'"});
        game.alphabet.intern(labels[i]);
    }
    LabelTable label(game.alphabet, errors);

    std::vector<NamedNode> nodes;
    std::set<std::string> ids;
    const auto& jnodes = Reader::array(Reader::field(root, "", "nodes"), "/nodes");
    for (std::size_t i = 0; i < jnodes.size(); ++i) {
        const auto p = item("/nodes", i);
        const auto& n = Reader::object(jnodes[i], p);
        NamedNode node;
        node.name = Reader::string(Reader::field(n, p, "id"), at(p, "id"));
        if (node.name.empty()) raise(ErrorCode::Schema, at(p, "id"), "empty node id");
        if (const json* l = Reader::optional(n, "label")) node.label = label(*l, at(p, "label"));
        if (const json* a = Reader::optional(n, "active")) node.active = Reader::boolean(*a, at(p, "active"));
        if (const json* s = Reader::optional(n, "strong")) node.strong = Reader::boolean(*s, at(p, "strong"));
        if (!ids.insert(node.name).second) {
            errors.push_back({ErrorCode::DuplicateId, 0, 0, at(p, "id"), "duplicate node id '" + node.name + "'"});
            continue;
        }
        nodes.push_back(std::move(node));
    }

    std::vector<std::pair<std::string, std::string>> edges;
    const auto& jedges = Reader::array(Reader::field(root, "", "edges"), "/edges");
    for (std::size_t i = 0; i < jedges.size(); ++i) {
        const auto p = item("/edges", i);
        const auto& e = Reader::array(jedges[i], p);
        if (e.size() != 2) raise(ErrorCode::Schema, p, "an edge lists two node ids");
        const auto a = Reader::string(e[0], item(p, 0));
        const auto b = Reader::string(e[1], item(p, 1));
        bool known = true;
        const std::string ends[] = {a, b};
        for (std::size_t k = 0; k < 2; ++k)
            if (!ids.count(ends[k])) {
                errors.push_back({ErrorCode::UnknownNode, 0, 0, item(p, k), "edge names unknown node '" + ends[k] + "'"});
                known = false;
            }
        if (known) edges.emplace_back(a, b);
    }

    const auto& jrules = Reader::array(Reader::field(root, "", "rules"), "/rules");
    for (std::size_t i = 0; i < jrules.size(); ++i) game.rules.push_back(parse_rule(jrules[i], item("/rules", i), label, errors));

    if (!errors.empty()) throw GameFileError(std::move(errors));

    auto named = assemble_network(std::move(nodes), edges);
    game.initial = std::move(named.network);
    game.names = std::move(named.names);
    for (const auto& v : validate(game.initial, game.alphabet))
        errors.push_back({ErrorCode::InvalidNetwork, 0, 0, "/nodes", v.what});
    for (const auto& v : validate_rules(game.rules, game.alphabet))
        errors.push_back({ErrorCode::InvalidRule, 0, 0, "/rules", v.what});
    if (!errors.empty()) throw GameFileError(std::move(errors));

    const bool connected = is_connected(game.initial);
    if (game.objective == Objective::Safety && !connected)
        raise(ErrorCode::ObjectivePrecondition, "/objective", "a safety game must start with a connected network");
    if (game.objective == Objective::Reachability && connected)
        raise(ErrorCode::ObjectivePrecondition, "/objective",
              "a reachability game must start with a disconnected network");
    return game;
}

std::string serialize_game(const Game& game) {
    const Alphabet& a = game.alphabet;
    const Network& net = game.initial;
    DocumentWriter w;
    w.scalar("version", kFormatVersion);
    w.scalar("objective", to_string(game.objective));
    w.inline_array("alphabet", a.names());
    std::vector<ordered_json> nodes;
    for (const Node& n : net.nodes()) {
        ordered_json j;
        j["id"] = game.vertex_name(n.id);
        j["label"] = a.name(n.label);
        j["active"] = n.active;
        j["strong"] = n.strong;
        nodes.push_back(std::move(j));
    }
    w.array("nodes", nodes);
    std::vector<ordered_json> edges;
    for (const auto& [u, v] : net.edges()) edges.push_back(ordered_json::array({game.vertex_name(u), game.vertex_name(v)}));
    w.array("edges", edges);
    std::vector<ordered_json> rules;
    for (const Rule& r : game.rules) rules.push_back(rule_json(r, a));
    w.array("rules", rules);
    return w.str();
}

PositionalStrategy parse_strategy(std::string_view text) {
    const json root = load_document(text);
    PositionalStrategy s;
    s.owner = parse_actor(Reader::field(root, "", "owner"), "/owner");
    s.objective = parse_objective(Reader::field(root, "", "objective"), "/objective");

    const auto& mode = Reader::object(Reader::field(root, "", "mode"), "/mode");
    auto flag = [&](const char* name) { return Reader::boolean(Reader::field(mode, "/mode", name), at("/mode", name)); };
    s.mode.model.strict_destructor = flag("strict_destructor");
    s.mode.model.constructor_never_skips = flag("constructor_never_skips");
    s.mode.model.constructor_move_free = flag("constructor_move_free");
    s.mode.prune_deleted = flag("prune_deleted");
    if (const json* b = Reader::optional(mode, "start_budget")) s.mode.start_budget = Reader::uint(*b, "/mode/start_budget");

    s.alphabet = string_list(Reader::field(root, "", "alphabet"), "/alphabet");
    if (s.alphabet.empty() || s.alphabet.front() != kBlankName)
        raise(ErrorCode::Schema, "/alphabet", "the alphabet starts with the blank label \"_\"");

    const auto& entries = Reader::array(Reader::field(root, "", "entries"), "/entries");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto p = item("/entries", i);
        const auto& e = Reader::object(entries[i], p);
        const auto hex = Reader::string(Reader::field(e, p, "key"), at(p, "key"));
        CanonicalKey key;
        Network rep;
        try {
            key = key_from_hex(hex);
            rep = decode_key(key);
            if (canonical_key(rep, key.actor(), s.mode.prune_deleted) != key) throw MalformedKey("key is not canonical");
        } catch (const MalformedKey& ex) {
            raise(ErrorCode::MalformedKey, at(p, "key"), std::string("malformed key: ") + ex.what());
        }
        for (const Node& n : rep.nodes())
            if (to_index(n.label) >= s.alphabet.size())
                raise(ErrorCode::DanglingKey, at(p, "key"), "dangling key: label id outside the strategy alphabet");
        std::uint64_t budget = 0;
        if (const json* b = Reader::optional(e, "budget")) budget = Reader::uint(*b, at(p, "budget"));
        HalfMove move = parse_move(Reader::field(e, p, "move"), at(p, "move"), key.actor());
        auto in_range = [&](VertexId v) { return to_index(v) < rep.size(); };
        if ((move.kind == MoveKind::Delete && !in_range(move.target)) ||
            !std::all_of(move.binding.begin(), move.binding.end(), in_range))
            raise(ErrorCode::DanglingKey, at(p, "move"), "dangling key: move names a vertex outside its position");
        if (!s.table.emplace(StrategyKey{std::move(key), budget}, std::move(move)).second)
            raise(ErrorCode::DuplicateId, p, "duplicate strategy entry");
    }
    return s;
}

std::string serialize_strategy(const PositionalStrategy& strategy) {
    Alphabet alphabet;
    for (const auto& name : strategy.alphabet) alphabet.intern(name);
    DocumentWriter w;
    w.scalar("version", kFormatVersion);
    w.scalar("owner", to_string(strategy.owner));
    w.scalar("objective", to_string(strategy.objective));
    ordered_json mode;
    mode["strict_destructor"] = strategy.mode.model.strict_destructor;
    mode["constructor_never_skips"] = strategy.mode.model.constructor_never_skips;
    mode["constructor_move_free"] = strategy.mode.model.constructor_move_free;
    mode["prune_deleted"] = strategy.mode.prune_deleted;
    mode["start_budget"] = strategy.mode.start_budget ? ordered_json(*strategy.mode.start_budget) : ordered_json();
    w.scalar("mode", mode);
    w.inline_array("alphabet", alphabet.names());
    std::vector<ordered_json> entries;
    for (const auto& [k, m] : strategy.table) {
        ordered_json e;
        e["key"] = to_hex(k.key);
        e["budget"] = k.budget;
        e["move"] = move_json(m);
        e["position"] = describe_network(decode_key(k.key), alphabet);
        entries.push_back(std::move(e));
    }
    w.array("entries", entries);
    return w.str();
}

TuringMachineSpec parse_tm(std::string_view text) {
    const json root = load_document(text);
    TuringMachineSpec tm;
    tm.states = string_list(Reader::field(root, "", "states"), "/states");
    tm.tape = string_list(Reader::field(root, "", "tape"), "/tape");
    tm.initial = Reader::string(Reader::field(root, "", "initial"), "/initial");
    tm.stop = Reader::string(Reader::field(root, "", "stop"), "/stop");
    const auto& ts = Reader::array(Reader::field(root, "", "transitions"), "/transitions");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const auto p = item("/transitions", i);
        const auto& t = Reader::object(ts[i], p);
        auto str = [&](const char* name) { return Reader::string(Reader::field(t, p, name), at(p, name)); };
        Transition tr{str("state"), str("read"), str("next"), str("write"), Direction::Right};
        const auto dir = str("move");
        if (dir == "L") tr.move = Direction::Left;
        else if (dir != "R") raise(ErrorCode::Schema, at(p, "move"), "move must be \"L\" or \"R\"");
        tm.transitions.push_back(std::move(tr));
    }
    std::vector<Diagnostic> errors;
    for (auto& e : validate(tm)) errors.push_back({ErrorCode::InvalidSpec, 0, 0, "", std::move(e)});
    if (!errors.empty()) throw GameFileError(std::move(errors));
    return tm;
}

std::string serialize_tm(const TuringMachineSpec& tm) {
    DocumentWriter w;
    w.scalar("version", kFormatVersion);
    w.inline_array("states", tm.states);
    w.inline_array("tape", tm.tape);
    w.scalar("initial", tm.initial);
    w.scalar("stop", tm.stop);
    std::vector<ordered_json> ts;
    for (const auto& t : tm.transitions) {
        ordered_json j;
        j["state"] = t.state;
        j["read"] = t.read;
        j["next"] = t.next;
        j["write"] = t.write;
        j["move"] = t.move == Direction::Left ? "L" : "R";
        ts.push_back(std::move(j));
    }
    w.array("transitions", ts);
    return w.str();
}

UndirectedGraphSpec parse_graph(std::string_view text) {
    const json root = load_document(text);
    UndirectedGraphSpec g;
    g.vertices = string_list(Reader::field(root, "", "vertices"), "/vertices");
    const auto& es = Reader::array(Reader::field(root, "", "edges"), "/edges");
    for (std::size_t i = 0; i < es.size(); ++i) {
        const auto p = item("/edges", i);
        const auto e = string_list(es[i], p);
        if (e.size() != 2) raise(ErrorCode::Schema, p, "an edge lists two vertices");
        g.edges.emplace_back(e[0], e[1]);
    }
    std::vector<Diagnostic> errors;
    for (auto& e : validate(g)) errors.push_back({ErrorCode::InvalidSpec, 0, 0, "", std::move(e)});
    if (!errors.empty()) throw GameFileError(std::move(errors));
    return g;
}

std::string serialize_graph(const UndirectedGraphSpec& graph) {
    DocumentWriter w;
    w.scalar("version", kFormatVersion);
    w.inline_array("vertices", graph.vertices);
    std::vector<ordered_json> es;
    for (const auto& [a, b] : graph.edges) es.push_back(ordered_json::array({a, b}));
    w.array("edges", es);
    return w.str();
}

std::string serialize_manifest(const TmGame& tm_game) {
    DocumentWriter w;
    w.scalar("version", kFormatVersion);
    w.scalar("initial_vertices", tm_game.game.initial.size());
    w.scalar("initial_edges", tm_game.game.initial.edge_count());
    w.scalar("rules", tm_game.game.rules.size());
    std::vector<ordered_json> families;
    for (const auto& [name, count] : tm_game.manifest) families.push_back(ordered_json{{"family", name}, {"count", count}});
    w.array("families", families);
    return w.str();
}

std::string export_dot(const Network& network, const Alphabet& alphabet, const std::vector<std::string>& names) {
    auto name = [&](VertexId id) {
        const auto i = to_index(id);
        return i < names.size() && !names[i].empty() ? names[i] : "#" + std::to_string(i);
    };
    std::ostringstream out;
    out << "graph network {\n  node [shape=circle];\n";
    for (const Node& n : network.nodes()) {
        const std::string label = alphabet.contains(n.label) ? alphabet.name(n.label) : "?" + std::to_string(to_index(n.label));
        out << "  " << dot_quote(name(n.id)) << " [label=\"" << dot_escape(name(n.id)) << "\\n" << dot_escape(label) << '"';
        if (n.strong) out << ", style=bold";
        else if (!n.active) out << ", style=dashed";
        out << "];\n";
    }
    for (const auto& [u, v] : network.edges()) out << "  " << dot_quote(name(u)) << " -- " << dot_quote(name(v)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_dot(const Game& game) { return export_dot(game.initial, game.alphabet, game.names); }

std::string describe_network(const Network& network, const Alphabet& alphabet) {
    std::string out;
    for (const Node& n : network.nodes()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(to_index(n.id)) + ":";
        out += alphabet.contains(n.label) ? alphabet.name(n.label) : "?" + std::to_string(to_index(n.label));
        if (n.strong) out += '*';
        if (!n.active) out += '~';
    }
    out += " |";
    for (const auto& [u, v] : network.edges()) out += " " + std::to_string(to_index(u)) + "-" + std::to_string(to_index(v));
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorCode::Io, "", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace netgames
