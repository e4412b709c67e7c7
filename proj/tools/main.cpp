// strata: root subsystem atlases and stratification Hasse diagrams for
// semisimple Lie algebra types.
//
// Exit codes: 0 success, 2 verification mismatch, 3 parse error,
// 4 capability (rank) error, 5 I/O error.

#include "strata/atlas.hpp"
#include "strata/cache.hpp"
#include "strata/classify.hpp"
#include "strata/corpus.hpp"
#include "strata/errors.hpp"
#include "strata/json_io.hpp"
#include "strata/render.hpp"
#include "strata/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 2;
constexpr int kExitParse = 3;
constexpr int kExitCapability = 4;
constexpr int kExitIo = 5;

#ifndef STRATA_DEFAULT_CORPUS
#define STRATA_DEFAULT_CORPUS ""
#endif

struct GlobalOpts {
    int rank_limit = strata::kDefaultRankLimit;
};

strata::Atlas obtain_atlas(const std::string& type, const GlobalOpts& g, bool use_cache) {
    const auto spec = strata::TypeSpec::parse(type);
    if (use_cache) {
        if (auto cached = strata::load_cached_atlas(spec)) return std::move(*cached);
    }
    strata::Atlas atlas = strata::build_atlas(spec, {g.rank_limit});
    if (use_cache) {
        try {
            strata::store_cached_atlas(atlas);
        } catch (const strata::IoError&) {
            // a read-only cache directory should not fail the query
        }
    }
    return atlas;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw strata::IoError("cannot open output file " + out_path);
    out << text;
}

int cmd_atlas(const std::string& type, const std::string& format, const std::string& out,
              bool fine, bool no_cache, const GlobalOpts& g) {
    const strata::Atlas atlas = obtain_atlas(type, g, !no_cache);
    std::string text;
    if (format == "dot")
        text = strata::render_dot(atlas, fine);
    else if (format == "json")
        text = strata::atlas_to_json_string(atlas);
    else
        text = strata::render_ascii(atlas, fine);
    write_output(text, out);
    return kExitOk;
}

int cmd_subsystems(const std::string& type, const std::string& label_filter,
                   const GlobalOpts& g) {
    const strata::Atlas atlas = obtain_atlas(type, g, false);
    const auto class_names = strata::display_labels(atlas.classes());
    std::cout << "subsystems of " << atlas.spec.str() << " (" << atlas.subsystems.size()
              << " total)\n";
    std::cout << "id\tlabel\trank\tsize\torbit\tclass\tmask\n";
    for (std::size_t i = 0; i < atlas.subsystems.size(); ++i) {
        const int cls = atlas.partition.class_of[i];
        const auto& c = atlas.classes()[std::size_t(cls)];
        const std::string label = c.label.str();
        if (!label_filter.empty() && label != label_filter) continue;
        std::ostringstream mask;
        for (int r : atlas.subsystems[i].indices()) {
            if (mask.tellp() > 0) mask << ',';
            mask << r;
        }
        std::cout << i << '\t' << label << '\t' << c.subsystem_rank << '\t'
                  << atlas.subsystems[i].count() << '\t' << cls << '\t' << class_names[std::size_t(cls)]
                  << "\t{" << mask.str() << "}\n";
    }
    return kExitOk;
}

// Length annotation relative to the ambient system, when it is irreducible
// with two root lengths and the subsystem is homogeneous.
std::string length_hint(const strata::RootSystem& rs, const strata::Subsystem& psi) {
    if (psi.none() || rs.spec().components().size() != 1) return "";
    strata::Coord lo = 0, hi = 0;
    for (std::size_t i = 0; i < rs.num_roots(); ++i) {
        const auto n = rs.norm2(int(i));
        if (lo == 0 || n < lo) lo = n;
        if (n > hi) hi = n;
    }
    if (lo == hi) return "";
    bool all_long = true, all_short = true;
    for (int i : psi.indices()) {
        if (rs.norm2(i) == hi) all_short = false;
        else all_long = false;
    }
    if (all_long) return " (long)";
    if (all_short) return " (short)";
    return "";
}

int cmd_classify(const std::string& type, const std::string& support_arg, bool zero,
                 bool coords, const GlobalOpts& g) {
    const strata::Atlas atlas = obtain_atlas(type, g, false);
    const auto& rs = *atlas.rs;

    std::vector<long long> numbers;
    {
        std::stringstream ss(support_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            try {
                numbers.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw strata::ParseError("bad support entry '" + tok + "'");
            }
        }
    }

    strata::PointSupport p;
    p.has_zero_weight = zero;
    if (coords) {
        if (numbers.size() % std::size_t(rs.rank()) != 0)
            throw strata::ParseError("coordinate list length must be a multiple of the rank " +
                                     std::to_string(rs.rank()));
        for (std::size_t i = 0; i < numbers.size(); i += std::size_t(rs.rank())) {
            strata::RootVec v(numbers.begin() + long(i), numbers.begin() + long(i) + rs.rank());
            const int idx = rs.index_of(v);
            if (idx < 0) {
                std::ostringstream os;
                os << "coordinates (";
                for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
                os << ") are not a root of " << atlas.spec.str();
                throw strata::ParseError(os.str());
            }
            p.support.push_back(idx);
        }
    } else {
        for (long long n : numbers) p.support.push_back(int(n));
    }

    const auto stab = strata::support_subsystem(rs, p);
    const auto label = strata::identify_type(rs, stab);
    std::cout << "type: " << atlas.spec.str() << "\n";
    std::cout << "support: {";
    for (std::size_t i = 0; i < p.support.size(); ++i)
        std::cout << (i ? "," : "") << p.support[i];
    std::cout << "}" << (p.has_zero_weight ? " + zero weight" : "") << "\n";
    std::cout << "stabilizer subsystem: {";
    const auto idx = stab.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) std::cout << (i ? "," : "") << idx[i];
    std::cout << "}  label " << label.str() << length_hint(rs, stab) << "\n";

    if (!strata::is_polystable(rs, p)) {
        std::cout << "polystable: no -- point not polystable; no stratum assigned\n";
        return kExitOk;
    }
    const auto stratum = strata::stratum_of(atlas, p);
    const auto names = strata::display_labels(atlas.classes());
    const auto& c = atlas.classes()[std::size_t(stratum.class_id)];
    std::cout << "polystable: yes\n";
    std::cout << "fine stratum: subsystem " << stratum.subsystem_id << " (" << label.str()
              << length_hint(rs, stab) << ")\n";
    std::cout << "coarse stratum: class " << stratum.class_id << " \""
              << names[std::size_t(stratum.class_id)] << "\" (m = " << c.embedding_number.str()
              << ", dim " << c.dim_top << ")\n";
    return kExitOk;
}

int cmd_verify(const std::string& corpus_dir, const std::string& types_csv,
               const GlobalOpts& g) {
    std::vector<std::string> wanted;
    {
        std::stringstream ss(types_csv);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) wanted.push_back(strata::TypeSpec::parse(tok).str());
    }
    auto corpus = strata::load_corpus(corpus_dir);
    if (!wanted.empty()) {
        std::erase_if(corpus, [&](const strata::ExpectedDiagram& d) {
            return std::find(wanted.begin(), wanted.end(),
                             strata::TypeSpec::parse(d.type).str()) == wanted.end();
        });
        if (corpus.empty()) throw strata::IoError("no corpus entries match the type filter");
    }

    struct Outcome {
        std::string type;
        bool match_ok = false;
        bool consistency_ok = false;
        std::vector<std::string> diffs;
    };
    // Independent pure computations: one async task per type.
    std::vector<std::future<Outcome>> futs;
    for (const auto& expected : corpus) {
        futs.push_back(std::async(std::launch::async, [&expected, &g]() {
            Outcome o;
            o.type = expected.type;
            const strata::Atlas atlas =
                strata::build_atlas(strata::TypeSpec::parse(expected.type), {g.rank_limit});
            const auto match = strata::match_diagram(atlas, expected);
            o.match_ok = match.ok;
            o.diffs = match.diffs;
            const auto report = strata::consistency_check(atlas);
            o.consistency_ok = report.all_passed();
            for (const auto& check : report.checks)
                if (!check.passed)
                    o.diffs.push_back("consistency: " + check.name +
                                      (check.detail.empty() ? "" : " (" + check.detail + ")"));
            return o;
        }));
    }

    int failures = 0;
    for (auto& f : futs) {
        const Outcome o = f.get();
        const bool ok = o.match_ok && o.consistency_ok;
        std::cout << o.type << ": " << (ok ? "PASS" : "FAIL") << "\n";
        for (const auto& d : o.diffs) std::cout << "    " << d << "\n";
        if (!ok) ++failures;
    }
    std::cout << (futs.size() - std::size_t(failures)) << "/" << futs.size()
              << " diagrams verified\n";
    return failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"root subsystem atlases and stratification Hasse diagrams"};
    app.set_version_flag("--version", strata::kToolVersion);
    app.require_subcommand(1);

    GlobalOpts global;
    app.add_option("--rank-limit", global.rank_limit,
                   "maximum total rank accepted for subsystem enumeration")
        ->capture_default_str();

    auto* atlas_cmd = app.add_subcommand("atlas", "compute an atlas and render its Hasse diagram");
    std::string atlas_type, atlas_format = "ascii", atlas_out;
    bool atlas_fine = false, atlas_nocache = false;
    atlas_cmd->add_option("type", atlas_type, "Lie type, e.g. G2, B3, A1A1")->required();
    atlas_cmd->add_option("--format", atlas_format, "dot|json|ascii")
        ->check(CLI::IsMember({"dot", "json", "ascii"}))
        ->capture_default_str();
    atlas_cmd->add_option("--out", atlas_out, "output path ('-' for stdout)");
    atlas_cmd->add_flag("--fine", atlas_fine, "render the fine poset (subsystems) instead of classes");
    atlas_cmd->add_flag("--no-cache", atlas_nocache, "recompute even when a cached atlas exists");

    auto* subs_cmd = app.add_subcommand("subsystems", "list every root subsystem");
    std::string subs_type, subs_label;
    subs_cmd->add_option("type", subs_type, "Lie type")->required();
    subs_cmd->add_option("--label", subs_label, "only subsystems of this type label, e.g. A1^2");

    auto* cls_cmd = app.add_subcommand("classify", "assign a support pattern to its stratum");
    std::string cls_type, cls_support;
    bool cls_zero = false, cls_coords = false;
    cls_cmd->add_option("type", cls_type, "Lie type")->required();
    cls_cmd->add_option("--support", cls_support, "comma-separated root indices (or coordinates with --coords)")
        ->required();
    cls_cmd->add_flag("--zero", cls_zero, "the point has a nonzero Cartan (weight-zero) component");
    cls_cmd->add_flag("--coords", cls_coords,
                      "interpret --support as flattened root coordinates in the simple-root basis");

    auto* verify_cmd = app.add_subcommand("verify", "check computed diagrams against the bundled corpus");
    std::string verify_corpus = STRATA_DEFAULT_CORPUS;
    std::string verify_types;
    verify_cmd->add_option("--corpus", verify_corpus, "corpus directory")->capture_default_str();
    verify_cmd->add_option("--types", verify_types, "comma-separated type filter, e.g. G2,B3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*atlas_cmd)
            return cmd_atlas(atlas_type, atlas_format, atlas_out, atlas_fine, atlas_nocache, global);
        if (*subs_cmd) return cmd_subsystems(subs_type, subs_label, global);
        if (*cls_cmd) return cmd_classify(cls_type, cls_support, cls_zero, cls_coords, global);
        if (*verify_cmd) return cmd_verify(verify_corpus, verify_types, global);
    } catch (const strata::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const strata::CapabilityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCapability;
    } catch (const strata::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
