#include "lislab/op_script.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "lislab/chain_oracle.hpp"
#include "lislab/random.hpp"

namespace lislab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

ScriptOp parse_op(const std::string& raw) {
    std::string body = raw;
    std::optional<Weight> expected;
    for (const std::string arrow : {"\xe2\x86\x92", "->"}) {
        const auto pos = body.find(arrow);
        if (pos == std::string::npos) continue;
        std::istringstream es(body.substr(pos + arrow.size()));
        Weight value = 0;
        std::string extra;
        if (!(es >> value) || (es >> extra)) throw InvalidInput("script: bad expected value in \"" + raw + "\"");
        expected = value;
        body = body.substr(0, pos);
        break;
    }

    std::istringstream in(body);
    std::string code;
    in >> code;
    ScriptOp op;
    bool ok = false;
    if (code == "I") {
        op.kind = OpKind::Insert;
        ok = static_cast<bool>(in >> op.x >> op.y >> op.w);
    } else if (code == "D") {
        op.kind = OpKind::Delete;
        ok = static_cast<bool>(in >> op.handle);
    } else if (code == "U") {
        op.kind = OpKind::Update;
        ok = static_cast<bool>(in >> op.handle >> op.w);
    } else if (code == "QG") {
        op.kind = OpKind::QueryGlobal;
        ok = true;
    } else if (code == "QR" || code == "QS") {
        op.kind = code == "QR" ? OpKind::QueryRange : OpKind::QuerySentinel;
        ok = static_cast<bool>(in >> op.xlo >> op.xhi);
    }
    std::string extra;
    if (!ok || (in >> extra)) throw InvalidInput("script: cannot parse \"" + trim(raw) + "\"");
    if (expected && !op.is_query()) throw InvalidInput("script: only queries take an expected value");
    op.expected = expected;
    return op;
}

std::vector<ScriptOp> parse_script(std::istream& in) {
    std::vector<ScriptOp> ops;
    std::string line;
    while (std::getline(in, line)) {
        const auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        ops.push_back(parse_op(t));
    }
    return ops;
}

std::string format_op(const ScriptOp& op) {
    std::ostringstream out;
    switch (op.kind) {
        case OpKind::Insert: out << "I " << op.x << ' ' << op.y << ' ' << op.w; break;
        case OpKind::Delete: out << "D " << op.handle; break;
        case OpKind::Update: out << "U " << op.handle << ' ' << op.w; break;
        case OpKind::QueryGlobal: out << "QG"; break;
        case OpKind::QueryRange: out << "QR " << op.xlo << ' ' << op.xhi; break;
        case OpKind::QuerySentinel: out << "QS " << op.xlo << ' ' << op.xhi; break;
    }
    if (op.expected) out << " \xe2\x86\x92 " << *op.expected;
    return out.str();
}

// Script handle k names the k-th insert of the script.
ReplayResult replay_script(DynamicSequence& seq, const std::vector<ScriptOp>& ops) {
    ReplayResult result;
    std::vector<Handle> issued;
    auto resolve = [&](std::uint64_t k) {
        if (k >= issued.size()) throw StaleHandle("script handle " + std::to_string(k) + " was never issued");
        return issued[k];
    };
    for (std::size_t idx = 0; idx < ops.size(); ++idx) {
        const ScriptOp& op = ops[idx];
        std::optional<Weight> answer;
        switch (op.kind) {
            case OpKind::Insert: issued.push_back(seq.insert({op.x, op.y, op.w, std::nullopt})); break;
            case OpKind::Delete: seq.erase(resolve(op.handle)); break;
            case OpKind::Update: seq.update_weight(resolve(op.handle), op.w); break;
            case OpKind::QueryGlobal: answer = seq.query_global(); break;
            case OpKind::QueryRange: answer = seq.query_range(op.xlo, op.xhi); break;
            case OpKind::QuerySentinel: answer = seq.query_range_via_sentinels(op.xlo, op.xhi); break;
        }
        ++result.operations;
        if (!answer) continue;
        result.answers.push_back(*answer);
        if (op.expected) {
            ++result.checked_queries;
            if (*op.expected != *answer) {
                result.mismatches.push_back("op " + std::to_string(idx) + " (" + format_op(op) + "): got " +
                                            std::to_string(*answer));
            }
        }
    }
    return result;
}

std::vector<ScriptOp> random_script(std::uint64_t seed, const ScriptOptions& options) {
    Rng rng(seed);
    const std::size_t universe = std::max<std::size_t>(options.universe, 1);
    std::vector<Coord> xs(universe);
    std::vector<Coord> ys(universe);
    std::iota(xs.begin(), xs.end(), Coord{0});
    std::iota(ys.begin(), ys.end(), Coord{0});
    std::shuffle(xs.begin(), xs.end(), rng);
    std::shuffle(ys.begin(), ys.end(), rng);

    std::vector<std::size_t> unused(universe);
    std::iota(unused.begin(), unused.end(), std::size_t{0});
    std::map<std::uint64_t, std::pair<std::size_t, WeightedPoint>> live;  // script handle -> (slot, point)
    std::uint64_t next_handle = 0;

    auto model = [&] {
        PointSet pts;
        for (const auto& [h, entry] : live) pts.push_back(entry.second);
        return pts;
    };
    auto pick_live = [&]() {
        auto it = live.begin();
        std::advance(it, static_cast<long>(uniform_weight(rng, 0, static_cast<Weight>(live.size()) - 1)));
        return it;
    };
    auto random_range = [&](ScriptOp& op) {
        const Weight span = static_cast<Weight>(universe) + 2;
        Coord a = uniform_weight(rng, -2, span);
        Coord b = uniform_weight(rng, -2, span);
        op.xlo = std::min(a, b);
        op.xhi = std::max(a, b);
    };

    std::vector<ScriptOp> ops;
    ops.reserve(options.steps);
    for (std::size_t step = 0; step < options.steps; ++step) {
        ScriptOp op;
        const Weight roll = uniform_weight(rng, 0, 99);
        if (live.empty() || (roll < 35 && !unused.empty())) {
            if (unused.empty()) {
                op.kind = OpKind::QueryGlobal;
            } else {
                const auto pos = static_cast<std::size_t>(
                    uniform_weight(rng, 0, static_cast<Weight>(unused.size()) - 1));
                const std::size_t slot = unused[pos];
                unused[pos] = unused.back();
                unused.pop_back();
                op.kind = OpKind::Insert;
                op.x = xs[slot];
                op.y = ys[slot];
                op.w = uniform_weight(rng, 0, options.max_weight);
                live.emplace(next_handle++, std::make_pair(slot, WeightedPoint{op.x, op.y, op.w, std::nullopt}));
            }
        } else if (roll < 55) {
            auto it = pick_live();
            op.kind = OpKind::Delete;
            op.handle = it->first;
            unused.push_back(it->second.first);
            live.erase(it);
        } else if (roll < 70) {
            auto it = pick_live();
            op.kind = OpKind::Update;
            op.handle = it->first;
            op.w = uniform_weight(rng, 0, options.max_weight);
            it->second.second.w = op.w;
        } else if (roll < 80) {
            op.kind = OpKind::QueryGlobal;
        } else if (roll < 90) {
            op.kind = OpKind::QueryRange;
            random_range(op);
        } else {
            op.kind = OpKind::QuerySentinel;
            random_range(op);
        }
        if (op.kind == OpKind::QueryGlobal) op.expected = max_weight_chain(model());
        if (op.kind == OpKind::QueryRange || op.kind == OpKind::QuerySentinel) {
            op.expected = max_weight_chain_in_xrange(model(), op.xlo, op.xhi);
        }
        ops.push_back(op);
    }
    return ops;
}

}  // namespace lislab
