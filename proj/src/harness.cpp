#include "ct/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ct/witness.hpp"

namespace ct {

const char* agreement_name(Agreement a) {
    switch (a) {
        case Agreement::Exact: return "exact";
        case Agreement::FormulaOnlyMismatch: return "formula-only-mismatch";
        case Agreement::ClassOnlyMismatch: return "class-only-mismatch";
    }
    return "?";
}

int Report::pass_count() const {
    int c = 0;
    for (const auto& r : records) c += r.pass();
    return c;
}

int Report::fail_count() const { return static_cast<int>(records.size()) - pass_count(); }

std::string default_cache_dir() {
    if (const char* env = std::getenv("CT_CACHE_DIR")) return env;
    return ".ct-cache";
}

std::string cache_path(const std::string& dir, int n, const EnumFilter& f) {
    return dir + "/ct_n" + std::to_string(n) + "_" + f.describe() + ".cache";
}

void cache_store(const std::string& dir, int n, const EnumFilter& f,
                 const std::vector<CanonicalCode>& codes) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::string path = cache_path(dir, n, f);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw IoError("cannot write cache file " + path);
    out << "ct-cache v1 n=" << n << " filter=" << f.describe() << "\n";
    for (const auto& c : codes) out << c.hex() << "\n";
    if (!out.good()) throw IoError("failed writing cache file " + path);
}

std::optional<std::vector<CanonicalCode>> cache_load(const std::string& dir, int n,
                                                     const EnumFilter& f) {
    std::string path = cache_path(dir, n, f);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string header;
    if (!std::getline(in, header)) throw CorruptCache("empty cache file " + path);
    std::string want = "ct-cache v1 n=" + std::to_string(n) + " filter=" + f.describe();
    if (header != want) return std::nullopt;  // stale or foreign cache
    std::vector<CanonicalCode> codes;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            CanonicalCode c = CanonicalCode::from_hex(line);
            ChemicalTree t = decode_canonical_code(c);
            if (t.order() != n) throw InvalidCode("order mismatch");
            codes.push_back(std::move(c));
        } catch (const InvalidCode& ex) {
            throw CorruptCache("cache file " + path + ": " + ex.what());
        }
    }
    return codes;
}

namespace {

struct Cell {
    Family family;
    int n, p;
};

struct CellOutput {
    std::vector<VerificationRecord> records;
    std::vector<Finding> findings;
};

std::vector<ChemicalTree> cell_trees(const Cell& c, const VerifyOptions& opts,
                                     const std::string& cache_dir) {
    EnumFilter f = c.family == Family::Segments ? EnumFilter::segments(c.p)
                                                : EnumFilter::branching(c.p);
    if (opts.use_cache) {
        if (auto codes = cache_load(cache_dir, c.n, f)) {
            std::vector<ChemicalTree> ts;
            ts.reserve(codes->size());
            for (const auto& code : *codes) ts.push_back(decode_canonical_code(code));
            return ts;
        }
    }
    EnumOptions eo;
    eo.order_cap = opts.order_cap;
    std::vector<ChemicalTree> ts = collect_chemical_trees(c.n, f, eo);
    if (opts.use_cache) {
        std::vector<CanonicalCode> codes;
        codes.reserve(ts.size());
        for (const auto& t : ts) codes.push_back(canonical_code(t));
        cache_store(cache_dir, c.n, f, codes);
    }
    return ts;
}

CellOutput process_cell(const Cell& c, const VerifyOptions& opts, const std::string& cache_dir) {
    auto t0 = std::chrono::steady_clock::now();
    CellOutput out;
    std::vector<ChemicalTree> trees = cell_trees(c, opts, cache_dir);

    std::vector<Index> indices;
    if (opts.both_indices)
        indices = {Index::M1, Index::M2};
    else
        indices = {*opts.only_index};

    ChemicalTree wit = build_witness(c.family, c.n, c.p);
    DegreeCensus wit_census = degree_census(wit);
    DegreeCensus want_census = regime_census(c.family, c.n, c.p);

    for (Index idx : indices) {
        VerificationRecord rec;
        rec.family = c.family;
        rec.n = c.n;
        rec.p = c.p;
        rec.index = idx;
        BoundResult bound = max_value({c.family, c.n, c.p, idx});
        rec.formula_value = bound.value;
        rec.regime = bound.regime;
        rec.n_trees = static_cast<long long>(trees.size());

        long long best = 0;
        std::set<std::string> maximizers, members;
        bool first = true;
        for (const auto& t : trees) {
            long long val = idx == Index::M1 ? zagreb_m1(t) : zagreb_m2(t);
            if (first || val > best) {
                maximizers.clear();
                best = val;
                first = false;
            }
            if (val == best) maximizers.insert(canonical_code(t).hex());
            if (class_membership(t, c.family, c.n, c.p, idx).member)
                members.insert(canonical_code(t).hex());
        }
        rec.brute_max = best;
        rec.n_maximizers = static_cast<long long>(maximizers.size());

        bool formula_ok = rec.formula_value == rec.brute_max;
        bool sets_ok = maximizers == members;
        rec.agreement = !formula_ok ? Agreement::FormulaOnlyMismatch
                        : sets_ok  ? Agreement::Exact
                                   : Agreement::ClassOnlyMismatch;

        long long wit_val = idx == Index::M1 ? zagreb_m1(wit) : zagreb_m2(wit);
        rec.witness_ok = wit_val == rec.formula_value && wit_census == want_census &&
                         class_membership(wit, c.family, c.n, c.p, idx).member;

        if (!formula_ok || !sets_ok) {
            Finding f;
            f.family = c.family;
            f.n = c.n;
            f.p = c.p;
            f.index = idx;
            f.type = !formula_ok ? "formula-mismatch" : "maximizer-class-mismatch";
            std::set_difference(maximizers.begin(), maximizers.end(), members.begin(),
                                members.end(), std::back_inserter(f.maximizers_not_in_class));
            std::set_difference(members.begin(), members.end(), maximizers.begin(),
                                maximizers.end(), std::back_inserter(f.class_not_maximizers));
            out.findings.push_back(std::move(f));
        }

        auto t1 = std::chrono::steady_clock::now();
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        out.records.push_back(std::move(rec));
    }
    return out;
}

}  // namespace

Report verify_family(const std::vector<Family>& families, int n_min, int n_max,
                     const VerifyOptions& opts) {
    if (n_min < 1 || n_min > n_max) throw Error("bad verification range");
    if (n_max > opts.order_cap)
        throw LimitExceeded("n_max above enumeration cap " + std::to_string(opts.order_cap));
    Report rep;
    rep.families = families;
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.index_sel = opts.both_indices ? "both" : index_name(*opts.only_index);
    rep.jobs = std::max(1, opts.jobs);
    rep.cache_enabled = opts.use_cache;
    std::string cache_dir = opts.cache_dir.empty() ? default_cache_dir() : opts.cache_dir;

    std::vector<Cell> cells;
    for (Family fam : families)
        for (int n = n_min; n <= n_max; ++n)
            for (int p = 0; p <= n; ++p)
                if (feasible(fam, n, p)) cells.push_back({fam, n, p});

    std::vector<CellOutput> outputs(cells.size());
    int jobs = std::min<int>(rep.jobs, static_cast<int>(cells.size()));
    if (jobs <= 1) {
        for (size_t i = 0; i < cells.size(); ++i) outputs[i] = process_cell(cells[i], opts, cache_dir);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= cells.size()) return;
                    outputs[i] = process_cell(cells[i], opts, cache_dir);
                }
            });
        for (auto& th : pool) th.join();
    }
    for (auto& o : outputs) {
        rep.records.insert(rep.records.end(), o.records.begin(), o.records.end());
        rep.findings.insert(rep.findings.end(), o.findings.begin(), o.findings.end());
    }
    // canonical record order: family, n, p, index
    std::stable_sort(rep.records.begin(), rep.records.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                         return std::tie(a.family, a.n, a.p, a.index) <
                                std::tie(b.family, b.n, b.p, b.index);
                     });
    return rep;
}

namespace {

nlohmann::ordered_json record_json(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    j["family"] = family_name(r.family);
    j["n"] = r.n;
    j["p"] = r.p;
    j["index"] = index_name(r.index);
    j["formula_value"] = r.formula_value;
    j["brute_max"] = r.brute_max;
    j["n_trees"] = r.n_trees;
    j["n_maximizers"] = r.n_maximizers;
    j["agreement"] = agreement_name(r.agreement);
    j["witness_ok"] = r.witness_ok;
    j["regime"] = r.regime;
    j["status"] = r.pass() ? "PASS" : "FAIL";
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json j;
        j["tool"] = "ct";
        j["version"] = r.version;
        nlohmann::ordered_json cfg;
        std::vector<std::string> fams;
        for (Family f : r.families) fams.push_back(family_name(f));
        cfg["families"] = fams;
        cfg["n_min"] = r.n_min;
        cfg["n_max"] = r.n_max;
        cfg["index"] = r.index_sel;
        cfg["jobs"] = r.jobs;
        cfg["cache"] = r.cache_enabled;
        j["config"] = cfg;
        j["records"] = nlohmann::ordered_json::array();
        for (const auto& rec : r.records) j["records"].push_back(record_json(rec));
        nlohmann::ordered_json sum;
        sum["pass"] = r.pass_count();
        sum["fail"] = r.fail_count();
        int exact = 0, cls = 0, frm = 0;
        for (const auto& rec : r.records) {
            exact += rec.agreement == Agreement::Exact;
            cls += rec.agreement == Agreement::ClassOnlyMismatch;
            frm += rec.agreement == Agreement::FormulaOnlyMismatch;
        }
        sum["agreement"] = {{"exact", exact},
                            {"class_only_mismatch", cls},
                            {"formula_only_mismatch", frm}};
        j["summary"] = sum;
        j["findings"] = nlohmann::ordered_json::array();
        for (const auto& f : r.findings) {
            nlohmann::ordered_json jf;
            jf["family"] = family_name(f.family);
            jf["n"] = f.n;
            jf["p"] = f.p;
            jf["index"] = index_name(f.index);
            jf["type"] = f.type;
            jf["maximizers_not_in_class"] = f.maximizers_not_in_class;
            jf["class_not_maximizers"] = f.class_not_maximizers;
            j["findings"].push_back(jf);
        }
        return j.dump(2) + "\n";
    }
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "family,n,p,index,formula_value,brute_max,n_trees,n_maximizers,agreement,"
               "witness_ok,regime,status,elapsed_ms\n";
        for (const auto& r2 : r.records)
            out << family_name(r2.family) << "," << r2.n << "," << r2.p << ","
                << index_name(r2.index) << "," << r2.formula_value << "," << r2.brute_max << ","
                << r2.n_trees << "," << r2.n_maximizers << "," << agreement_name(r2.agreement)
                << "," << (r2.witness_ok ? "true" : "false") << "," << r2.regime << ","
                << (r2.pass() ? "PASS" : "FAIL") << "," << r2.elapsed_ms << "\n";
        return out.str();
    }
    std::ostringstream out;
    for (const auto& r2 : r.records)
        out << (r2.pass() ? "PASS" : "FAIL") << " " << family_name(r2.family) << " n=" << r2.n
            << " p=" << r2.p << " " << index_name(r2.index) << " formula=" << r2.formula_value
            << " brute=" << r2.brute_max << " trees=" << r2.n_trees
            << " maximizers=" << r2.n_maximizers << " agreement=" << agreement_name(r2.agreement)
            << " witness=" << (r2.witness_ok ? "ok" : "BAD") << " [" << r2.regime << "]\n";
    out << "summary: pass=" << r.pass_count() << " fail=" << r.fail_count()
        << " findings=" << r.findings.size() << "\n";
    return out.str();
}

}  // namespace ct
