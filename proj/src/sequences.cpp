#include "tauseq/sequences.hpp"

#include "tauseq/error.hpp"

namespace tauseq {

namespace {

bool over(const Level& level, const SignedObject& x) {
    return x.algebra() == level.algebra() && level.registry().find(x).has_value();
}

std::vector<SignedObject> init(const std::vector<SignedObject>& t) { return {t.begin(), t.end() - 1}; }

}  // namespace

Sequence psi(const Level& root, const std::vector<SignedObject>& t) {
    if (t.empty()) return {};
    const auto& last = t.back();
    if (!over(root, last)) throw DomainError("object is not τ-rigid");
    Sequence out;
    if (t.size() > 1) {
        const auto& ctx = root.context(last);
        std::vector<SignedObject> reduced;
        for (const auto& x : init(t)) reduced.push_back(ctx.e_map(x).gamma);
        out = psi(ctx.child(), reduced);
    }
    out.push_back({last, &root, root.name(last)});
    return out;
}

std::vector<SignedObject> phi(const Level& root, const std::vector<SignedObject>& seq) {
    if (seq.empty()) return {};
    const auto& last = seq.back();
    if (!over(root, last)) throw DomainError("object is not τ-rigid over its level");
    std::vector<SignedObject> out;
    if (seq.size() > 1) {
        const auto& ctx = root.context(last);
        for (const auto& y : phi(ctx.child(), init(seq))) out.push_back(ctx.e_inverse(y));
    }
    out.push_back(last);
    return out;
}

Sequence parse_sequence(const Level& root, const std::vector<std::string>& names) {
    if (names.empty()) return {};
    auto x = root.resolve(names.back());
    if (!over(root, x)) throw DomainError(names.back() + " is not τ-rigid");
    Sequence out;
    if (names.size() > 1)
        out = parse_sequence(root.context(x).child(), {names.begin(), names.end() - 1});
    out.push_back({x, &root, root.name(x)});
    return out;
}

bool is_signed_exceptional(const Level& root, const std::vector<SignedObject>& seq) {
    if (seq.empty()) return true;
    if (!over(root, seq.back())) return false;
    if (seq.size() == 1) return true;
    if (root.algebra()->num_vertices() < 2) return false;
    return is_signed_exceptional(root.context(seq.back()).child(), init(seq));
}

Validation validate_sequence(const AlgebraPtr& a, const std::vector<NamedModule>& catalog,
                             const std::vector<std::string>& names) {
    const Level root(a, catalog);
    const Level* level = &root;
    for (std::size_t i = names.size(); i-- > 0;) {
        const auto where = "entry " + std::to_string(i + 1) + " (" + names[i] + "): ";
        SignedObject x;
        try {
            x = level->resolve(names[i]);
        } catch (const Error& e) {
            return {false, where + e.what()};
        }
        if (!is_tau_rigid(x)) return {false, where + "not τ-rigid"};
        if (i == 0) break;
        if (level->algebra()->num_vertices() < 2) return {false, where + "the sequence is longer than the rank"};
        try {
            level = &level->context(x).child();
        } catch (const Error& e) {
            return {false, where + e.what()};
        }
    }
    return {};
}

std::vector<std::string> names(const Sequence& s) {
    std::vector<std::string> out;
    for (const auto& e : s) out.push_back(e.name);
    return out;
}

std::vector<SignedObject> objects(const Sequence& s) {
    std::vector<SignedObject> out;
    for (const auto& e : s) out.push_back(e.object);
    return out;
}

std::string to_string(const Sequence& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].name;
    return out + ")";
}

namespace {

std::vector<std::vector<int>> compatible_tuples(const Registry& r, int k, bool ordered) {
    std::vector<std::vector<int>> out;
    if (k < 0) return out;
    std::vector<int> pick;
    std::vector<bool> used(static_cast<std::size_t>(r.size()));
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        const int from = ordered || pick.empty() ? 0 : pick.back() + 1;
        for (int i = from; i < r.size(); ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            bool ok = true;
            for (int j : pick) ok = ok && r.compatible(i, j);
            if (!ok) continue;
            used[static_cast<std::size_t>(i)] = true;
            pick.push_back(i);
            self(self);
            pick.pop_back();
            used[static_cast<std::size_t>(i)] = false;
        }
    };
    rec(rec);
    return out;
}

void extend(const Level& level, int k, Sequence& tail, std::vector<Sequence>& out) {
    const auto& r = level.registry();
    for (int id = 0; id < r.size(); ++id) {
        tail.insert(tail.begin(), {r[id], &level, level.name(r[id])});
        if (k == 1)
            out.push_back(tail);
        else if (level.algebra()->num_vertices() > 1)
            extend(level.context(r[id]).child(), k - 1, tail, out);
        tail.erase(tail.begin());
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_ordered(const Registry& r, int k) { return compatible_tuples(r, k, true); }

std::vector<std::vector<int>> enumerate_unordered(const Registry& r, int k) { return compatible_tuples(r, k, false); }

std::vector<Sequence> enumerate_sequences(const Level& root, int k, const std::optional<SignedObject>& last) {
    std::vector<Sequence> out;
    if (k <= 0) {
        if (k == 0 && !last) out.emplace_back();
        return out;
    }
    const auto& r = root.registry();
    for (int id = 0; id < r.size(); ++id) {
        if (last && !is_iso(r[id], *last)) continue;
        Sequence tail{{r[id], &root, root.name(r[id])}};
        if (k == 1)
            out.push_back(tail);
        else if (root.algebra()->num_vertices() > 1)
            extend(root.context(r[id]).child(), k - 1, tail, out);
    }
    return out;
}

std::size_t count_sequences(const Level& root, int k, const std::optional<SignedObject>& last) {
    return enumerate_sequences(root, k, last).size();
}

}  // namespace tauseq
