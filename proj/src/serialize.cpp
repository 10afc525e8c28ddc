#include "ftreach/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ftreach {

namespace {

class Reader {
public:
    explicit Reader(std::istream &is) : is_(is) {}

    std::string word() {
        std::string w;
        if (!(is_ >> w)) throw parse_error("unexpected end of structure file");
        return w;
    }
    long long num() {
        long long v;
        if (!(is_ >> v)) throw parse_error("expected a number in structure file");
        return v;
    }
    int num_int() { return static_cast<int>(num()); }
    void expect(const std::string &label) {
        std::string w = word();
        if (w != label)
            throw parse_error("expected '" + label + "' but found '" + w + "'");
    }

private:
    std::istream &is_;
};

void write_graph(std::ostream &os, const DiGraph &g) {
    os << "graph " << g.n() << ' ' << g.m();
    for (const Edge &e : g.edges()) os << ' ' << e.tail << ' ' << e.head;
    os << '\n';
}

DiGraph read_graph(Reader &r) {
    r.expect("graph");
    int n = r.num_int();
    int m = r.num_int();
    DiGraph g(n);
    for (int i = 0; i < m; ++i) {
        int u = r.num_int();
        int v = r.num_int();
        g.add_edge(u, v);
    }
    return g;
}

void write_ints(std::ostream &os, const std::string &label,
                const std::vector<int> &values) {
    os << label << ' ' << values.size();
    for (int v : values) os << ' ' << v;
    os << '\n';
}

std::vector<int> read_ints(Reader &r, const std::string &label) {
    r.expect(label);
    long long count = r.num();
    std::vector<int> values(count);
    for (auto &v : values) v = r.num_int();
    return values;
}

void write_ftro(std::ostream &os, const SsFtro &o) {
    os << "ftro " << o.base.root << ' ' << (o.base.dir == Dir::FromRoot ? 0 : 1) << ' '
       << o.base.k << ' ' << (o.base.pruned ? 1 : 0) << '\n';
    write_graph(os, o.base.sub);
    write_ints(os, "kept", o.base.kept_host_ids);
}

SsFtro read_ftro(Reader &r) {
    r.expect("ftro");
    SsFtro o;
    o.base.root = r.num_int();
    o.base.dir = r.num() == 0 ? Dir::FromRoot : Dir::ToRoot;
    o.base.k = r.num_int();
    o.base.pruned = r.num() != 0;
    o.base.sub = read_graph(r);
    o.base.kept_host_ids = read_ints(r, "kept");
    return o;
}

void write_pair_flags(std::ostream &os, VertexPair p, bool trivial, bool unreachable) {
    os << p.s << ' ' << p.t << ' ' << (trivial ? 1 : 0) << ' ' << (unreachable ? 1 : 0);
}

void write_skeletons(std::ostream &os, const StoredSkeletons &s) {
    os << "entries " << s.entries.size() << '\n';
    for (const auto &e : s.entries) {
        os << "entry ";
        write_pair_flags(os, e.pair, e.trivial, e.unreachable);
        os << '\n';
        write_graph(os, e.sub);
    }
}

StoredSkeletons read_skeletons(Reader &r) {
    StoredSkeletons s;
    r.expect("entries");
    long long count = r.num();
    for (long long i = 0; i < count; ++i) {
        r.expect("entry");
        StoredSkeletons::Entry e;
        e.pair.s = r.num_int();
        e.pair.t = r.num_int();
        e.trivial = r.num() != 0;
        e.unreachable = r.num() != 0;
        e.sub = read_graph(r);
        s.index.emplace(e.pair, static_cast<int>(s.entries.size()));
        s.entries.push_back(std::move(e));
    }
    return s;
}

void write_dual(std::ostream &os, const DualOracle &oracle) {
    os << "levels " << oracle.lifted.levels.size() << '\n';
    for (std::size_t li = 0; li < oracle.lifted.levels.size(); ++li) {
        const DualOracleSlack &level = oracle.lifted.levels[li];
        os << "level " << level.L << ' ' << oracle.lifted.level_inputs[li] << ' '
           << oracle.lifted.level_covered[li] << '\n';
        write_ints(os, "hubs", level.hitting);
        for (std::size_t h = 0; h < level.hitting.size(); ++h) {
            write_ftro(os, level.to_hub[h]);
            write_ftro(os, level.from_hub[h]);
        }
        os << "records " << level.records.size() << '\n';
        for (const auto &rec : level.records) {
            os << "record ";
            write_pair_flags(os, rec.pair, rec.trivial, rec.unreachable);
            os << '\n';
            os << "table";
            for (const auto &entry : rec.table) os << ' ' << (entry ? *entry : -1);
            os << '\n';
            write_ints(os, "origin", rec.aux.origin);
            os << "auxcounts " << rec.aux.path_edge_count << ' ' << rec.aux.aux_edge_count
               << '\n';
            write_graph(os, rec.aux.graph);
            std::vector<int> flags(rec.aux.off_strand.begin(), rec.aux.off_strand.end());
            write_ints(os, "offstrand", flags);
            write_ftro(os, rec.aux_oracle);
        }
    }
    os << "bases " << oracle.lifted.bases.size() << '\n';
    for (const auto &base : oracle.lifted.bases) {
        os << "base ";
        write_pair_flags(os, base.pair, base.trivial, base.unreachable);
        os << '\n';
        write_graph(os, base.sub);
    }
}

DualOracle read_dual(Reader &r) {
    DualOracle oracle;
    r.expect("levels");
    long long levels = r.num();
    for (long long li = 0; li < levels; ++li) {
        r.expect("level");
        DualOracleSlack level;
        level.L = r.num_int();
        oracle.lifted.level_inputs.push_back(static_cast<std::size_t>(r.num()));
        oracle.lifted.level_covered.push_back(static_cast<std::size_t>(r.num()));
        level.hitting = read_ints(r, "hubs");
        for (std::size_t h = 0; h < level.hitting.size(); ++h) {
            level.hub_index.emplace(level.hitting[h], static_cast<int>(h));
            level.to_hub.push_back(read_ftro(r));
            level.from_hub.push_back(read_ftro(r));
        }
        r.expect("records");
        long long records = r.num();
        for (long long i = 0; i < records; ++i) {
            r.expect("record");
            DualOracleSlack::PairRecord rec;
            rec.pair.s = r.num_int();
            rec.pair.t = r.num_int();
            rec.trivial = r.num() != 0;
            rec.unreachable = r.num() != 0;
            r.expect("table");
            for (auto &entry : rec.table) {
                int v = r.num_int();
                entry = v < 0 ? std::nullopt : std::optional<VertexId>(v);
            }
            rec.aux.origin = read_ints(r, "origin");
            for (std::size_t a = 0; a < rec.aux.origin.size(); ++a)
                rec.aux.aux_of.emplace(rec.aux.origin[a], static_cast<int>(a));
            r.expect("auxcounts");
            rec.aux.path_edge_count = r.num_int();
            rec.aux.aux_edge_count = r.num_int();
            rec.aux.graph = read_graph(r);
            std::vector<int> flags = read_ints(r, "offstrand");
            rec.aux.off_strand.assign(flags.begin(), flags.end());
            rec.aux_oracle = read_ftro(r);
            level.record_of.emplace(rec.pair, static_cast<int>(level.records.size()));
            level.covered.push_back(rec.pair);
            level.records.push_back(std::move(rec));
        }
        for (const VertexPair &p : level.covered)
            oracle.lifted.route[p] = {0, static_cast<int>(li)};
        oracle.lifted.levels.push_back(std::move(level));
    }
    r.expect("bases");
    long long bases = r.num();
    for (long long i = 0; i < bases; ++i) {
        r.expect("base");
        DualOracle::PairBase base;
        base.pair.s = r.num_int();
        base.pair.t = r.num_int();
        base.trivial = r.num() != 0;
        base.unreachable = r.num() != 0;
        base.sub = read_graph(r);
        oracle.lifted.route[base.pair] = {1, static_cast<int>(oracle.lifted.bases.size())};
        oracle.lifted.bases.push_back(std::move(base));
    }
    return oracle;
}

void write_vertex_oracle(std::ostream &os, const VertexFailOracle &o) {
    os << "vfo " << o.n << ' ' << o.alpha << '\n';
    os << "pairs " << o.pairs.size() << '\n';
    for (std::size_t i = 0; i < o.pairs.size(); ++i) {
        os << o.pairs[i].s << ' ' << o.pairs[i].t << ' '
           << static_cast<int>(o.base_reachable[i]) << ' '
           << static_cast<int>(o.trivial[i]) << '\n';
    }
    write_ints(os, "core", o.core_pairs);
    os << "groups " << o.groups.size() << '\n';
    for (std::size_t gi = 0; gi < o.groups.size(); ++gi) {
        write_ints(os, "members", o.groups[gi]);
        write_ints(os, "pred", o.aprs[gi].pred_parent);
        write_ints(os, "succ", o.aprs[gi].succ_parent);
        write_ints(os, "hmap", o.aprs[gi].hmap);
    }
    os << "spans " << o.span.size() << '\n';
    for (const auto &row : o.span) {
        os << row.size();
        for (const auto &[a, b] : row) os << ' ' << a << ' ' << b;
        os << '\n';
    }
    os << "leftover " << o.leftover.size() << '\n';
    for (const auto &row : o.leftover) write_ints(os, "row", row);
}

VertexFailOracle read_vertex_oracle(Reader &r) {
    VertexFailOracle o;
    r.expect("vfo");
    o.n = r.num_int();
    o.alpha = r.num_int();
    r.expect("pairs");
    long long pairs = r.num();
    for (long long i = 0; i < pairs; ++i) {
        VertexPair p;
        p.s = r.num_int();
        p.t = r.num_int();
        o.base_reachable.push_back(static_cast<char>(r.num()));
        o.trivial.push_back(static_cast<char>(r.num()));
        o.pair_index.emplace(p, static_cast<int>(o.pairs.size()));
        o.pairs.push_back(p);
    }
    o.core_pairs = read_ints(r, "core");
    r.expect("groups");
    long long groups = r.num();
    for (long long gi = 0; gi < groups; ++gi) {
        CutSetAPR apr;
        apr.order = read_ints(r, "members");
        for (std::size_t i = 0; i < apr.order.size(); ++i)
            apr.pos.emplace(apr.order[i], static_cast<int>(i));
        apr.pred_parent = read_ints(r, "pred");
        apr.succ_parent = read_ints(r, "succ");
        apr.hmap = read_ints(r, "hmap");
        apr.pred_index.build(apr.pred_parent);
        apr.succ_index.build(apr.succ_parent);
        for (VertexId v : apr.order)
            o.group_of.emplace(v, static_cast<int>(gi));
        o.groups.push_back(apr.order);
        o.aprs.push_back(std::move(apr));
    }
    r.expect("spans");
    long long span_rows = r.num();
    for (long long i = 0; i < span_rows; ++i) {
        long long cols = r.num();
        std::vector<std::pair<VertexId, VertexId>> row(cols);
        for (auto &[a, b] : row) {
            a = r.num_int();
            b = r.num_int();
        }
        o.span.push_back(std::move(row));
    }
    r.expect("leftover");
    long long rows = r.num();
    for (long long i = 0; i < rows; ++i) o.leftover.push_back(read_ints(r, "row"));
    return o;
}

void write_edge_oracle(std::ostream &os, const EdgeFailOracle &o) {
    os << "cutedges " << o.cut_edges.size();
    for (const Edge &e : o.cut_edges) os << ' ' << e.tail << ' ' << e.head;
    os << '\n';
    os << "mids " << o.mid_of.size();
    for (const auto &[e, mid] : o.mid_of) os << ' ' << e.tail << ' ' << e.head << ' ' << mid;
    os << '\n';
    write_vertex_oracle(os, o.inner);
}

EdgeFailOracle read_edge_oracle(Reader &r) {
    EdgeFailOracle o;
    r.expect("cutedges");
    long long cuts = r.num();
    for (long long i = 0; i < cuts; ++i) {
        Edge e;
        e.tail = r.num_int();
        e.head = r.num_int();
        o.cut_edges.insert(e);
    }
    r.expect("mids");
    long long mids = r.num();
    for (long long i = 0; i < mids; ++i) {
        Edge e;
        e.tail = r.num_int();
        e.head = r.num_int();
        VertexId mid = r.num_int();
        o.mid_of.emplace(e, mid);
        o.strong_cut_edges.insert(e);
    }
    o.inner = read_vertex_oracle(r);
    return o;
}

void write_stored(std::ostream &os, const StoredSubgraph &s) {
    os << "params " << s.k << ' ' << s.ell << '\n';
    write_ints(os, "sampled", s.sampled);
    write_graph(os, s.sub);
}

StoredSubgraph read_stored(Reader &r, const std::string &kind) {
    StoredSubgraph s;
    s.kind = kind;
    r.expect("params");
    s.k = r.num_int();
    s.ell = r.num();
    s.sampled = read_ints(r, "sampled");
    s.sub = read_graph(r);
    return s;
}

} // namespace

StoredSkeletons build_stored_skeletons(const DiGraph &g, const PairList &pairs) {
    StoredSkeletons s;
    for (const VertexPair &p : pairs) {
        if (s.index.count(p)) continue;
        StoredSkeletons::Entry e;
        e.pair = p;
        if (p.s == p.t) {
            e.trivial = true;
            e.sub = DiGraph(g.n());
        } else if (!reachable_ids(g, p.s, p.t, {})) {
            e.unreachable = true;
            e.sub = DiGraph(g.n());
        } else {
            e.sub = build_pair_skeleton(g, p.s, p.t).kept.materialize();
        }
        s.index.emplace(p, static_cast<int>(s.entries.size()));
        s.entries.push_back(std::move(e));
    }
    return s;
}

bool StoredSkeletons::query(VertexPair pair, const EdgeList &failures) const {
    auto it = index.find(pair);
    if (it == index.end()) throw input_error("unknown query pair");
    const Entry &e = entries[it->second];
    if (e.trivial) return true;
    if (e.unreachable) return false;
    if (failures.size() > 2) throw input_error("skeleton answers at most two failures");
    std::vector<EdgeId> failed;
    for (const Edge &f : failures)
        if (auto id = e.sub.find_edge(f.tail, f.head)) failed.push_back(*id);
    return reachable_ids(e.sub, pair.s, pair.t, failed);
}

std::size_t StoredSkeletons::words() const {
    std::size_t w = 0;
    for (const auto &e : entries) w += 4 + 2 * e.sub.m();
    return w;
}

bool StoredSubgraph::query(VertexPair pair, const EdgeList &failures) const {
    if (static_cast<int>(failures.size()) > std::max(2, k))
        throw input_error("too many failures for this structure");
    std::vector<EdgeId> failed;
    for (const Edge &f : failures)
        if (auto id = sub.find_edge(f.tail, f.head)) failed.push_back(*id);
    return reachable_ids(sub, pair.s, pair.t, failed);
}

bool AnyStructure::query(VertexPair pair, const EdgeList &edge_failures,
                         const std::vector<VertexId> &vertex_failures) const {
    if (!vertex_failures.empty()) {
        if (kind != "ftro1-vertex" || !vertex_oracle)
            throw input_error("structure does not answer vertex-failure queries");
        if (vertex_failures.size() != 1)
            throw input_error("vertex oracle answers exactly one failure");
        return vertex_query(*vertex_oracle, pair, vertex_failures[0]);
    }
    if (vertex_oracle) { // no failure given: plain reachability bit
        auto it = vertex_oracle->pair_index.find(pair);
        if (it == vertex_oracle->pair_index.end()) throw input_error("unknown query pair");
        return vertex_oracle->base_reachable[it->second] != 0;
    }
    if (skeletons) return skeletons->query(pair, edge_failures);
    if (dual) return dual->query(pair, edge_failures);
    if (edge_oracle) {
        if (edge_failures.size() > 1)
            throw input_error("edge oracle answers at most one failure");
        if (edge_failures.empty()) {
            auto it = edge_oracle->inner.pair_index.find(pair);
            if (it == edge_oracle->inner.pair_index.end())
                throw input_error("unknown query pair");
            return edge_oracle->inner.base_reachable[it->second] != 0;
        }
        return edge_query(*edge_oracle, pair, edge_failures[0]);
    }
    if (stored) return stored->query(pair, edge_failures);
    throw input_error("empty structure");
}

std::size_t AnyStructure::words() const {
    if (skeletons) return skeletons->words();
    if (dual) return dual->words();
    if (vertex_oracle) return vertex_oracle->words();
    if (edge_oracle) return edge_oracle->words();
    if (stored) return stored->words();
    return 0;
}

std::size_t AnyStructure::edges_kept() const {
    std::size_t total = 0;
    if (skeletons)
        for (const auto &e : skeletons->entries) total += e.sub.m();
    if (dual) {
        for (const auto &level : dual->lifted.levels) {
            for (const auto &o : level.to_hub) total += o.base.sub.m();
            for (const auto &o : level.from_hub) total += o.base.sub.m();
            for (const auto &rec : level.records) total += rec.aux_oracle.base.sub.m();
        }
        for (const auto &base : dual->lifted.bases) total += base.sub.m();
    }
    if (vertex_oracle)
        for (const auto &group : vertex_oracle->groups) total += group.size();
    if (edge_oracle) total = edge_oracle->cut_edges.size();
    if (stored) total = stored->sub.m();
    return total;
}

void save_structure(std::ostream &os, const AnyStructure &structure) {
    os << "FTREACH v1 " << structure.kind << '\n';
    if (structure.skeletons) {
        write_skeletons(os, *structure.skeletons);
    } else if (structure.dual) {
        write_dual(os, *structure.dual);
    } else if (structure.vertex_oracle) {
        write_vertex_oracle(os, *structure.vertex_oracle);
    } else if (structure.edge_oracle) {
        write_edge_oracle(os, *structure.edge_oracle);
    } else if (structure.stored) {
        write_stored(os, *structure.stored);
    } else {
        throw input_error("empty structure");
    }
}

AnyStructure load_structure(std::istream &is) {
    Reader r(is);
    r.expect("FTREACH");
    r.expect("v1");
    AnyStructure out;
    out.kind = r.word();
    if (out.kind == "pair-skel") {
        out.skeletons = read_skeletons(r);
    } else if (out.kind == "dual-oracle") {
        out.dual = read_dual(r);
    } else if (out.kind == "ftro1-vertex") {
        out.vertex_oracle = read_vertex_oracle(r);
    } else if (out.kind == "ftro1-edge") {
        out.edge_oracle = read_edge_oracle(r);
    } else if (out.kind == "dual-preserver" || out.kind == "k-ftrs") {
        out.stored = read_stored(r, out.kind);
    } else {
        throw parse_error("unknown structure kind: " + out.kind);
    }
    return out;
}

} // namespace ftreach
