#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "biquasile/invariants.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bq::parse_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

struct AlgebraOpt {
    std::vector<std::string> files;
    std::vector<int> alexander; // N d s n

    std::vector<std::pair<std::string, bq::Biquasile>> load() const {
        std::vector<std::pair<std::string, bq::Biquasile>> out;
        for (const auto& f : files) out.emplace_back(stem(f), bq::parse_matrix(slurp(f)));
        if (!alexander.empty()) {
            const auto& a = alexander;
            std::string name = "alexander(" + std::to_string(a[0]) + "," +
                               std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
                               std::to_string(a[3]) + ")";
            out.emplace_back(name, bq::alexander_biquasile(a[0], a[1], a[2], a[3]));
        }
        if (out.empty()) throw bq::domain_error("no algebra given");
        return out;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"biquasile counting and Boltzmann-enhanced invariants of marked graph diagrams"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "parallel workers for the solver");

    std::string algebra_file, diagram_file, diagram_file2, weight_file, corpus_dir, sign;
    AlgebraOpt alg;
    int order = 0;
    bool want_list = false, want_count = false;

    auto* check = app.add_subcommand("check", "validate a biquasile file");
    check->add_option("algebra", algebra_file)->required();

    auto* color = app.add_subcommand("color", "count or list colorings");
    color->add_option("diagram", diagram_file)->required();
    color->add_option("algebra", algebra_file);
    color->add_option("--alexander", alg.alexander, "N d s n")->expected(4);
    color->add_flag("--count", want_count);
    color->add_flag("--list", want_list);
    bool use_oracle = false;
    color->add_flag("--oracle", use_oracle, "use the exhaustive reference counter");

    auto* invariant = app.add_subcommand("invariant", "Boltzmann-enhanced invariant polynomial");
    invariant->add_option("diagram", diagram_file)->required();
    invariant->add_option("algebra", algebra_file)->required();
    invariant->add_option("weight", weight_file)->required();

    auto* enumerate = app.add_subcommand("enumerate", "list all biquasiles of an order");
    enumerate->add_option("order", order)->required();

    auto* resolve = app.add_subcommand("resolve", "smooth all marked vertices");
    resolve->add_option("diagram", diagram_file)->required();
    resolve->add_option("sign", sign)->required()->check(CLI::IsMember({"+", "-"}));

    auto* cmp = app.add_subcommand("compare", "compare two diagrams");
    cmp->add_option("diagram1", diagram_file)->required();
    cmp->add_option("diagram2", diagram_file2)->required();
    cmp->add_option("--algebras", alg.files)->expected(-1);
    cmp->add_option("--alexander", alg.alexander)->expected(4);
    cmp->add_option("--weights", weight_file);

    auto* table = app.add_subcommand("table", "invariant table over a fixture directory");
    table->add_option("corpus", corpus_dir)->required();
    table->add_option("--algebras", alg.files)->expected(-1);
    table->add_option("--alexander", alg.alexander)->expected(4);

    CLI11_PARSE(app, argc, argv);

    if (check->parsed()) {
        try {
            bq::parse_matrix(slurp(algebra_file));
        } catch (const bq::parse_error&) {
            throw;
        } catch (const bq::domain_error& e) {
            std::cout << "invalid: " << e.what() << "\n";
            return 1;
        }
        std::cout << "valid biquasile\n";
        return 0;
    }
    if (color->parsed()) {
        if (!algebra_file.empty()) alg.files.push_back(algebra_file);
        const auto d = bq::parse_diagram(slurp(diagram_file));
        const auto X = alg.load().front().second;
        if (want_list) {
            for (const auto& f : bq::list_colorings(d, X)) {
                for (size_t i = 0; i < f.assignment.size(); ++i)
                    std::cout << (i ? " " : "") << f.assignment[i];
                std::cout << "\n";
            }
            return 0;
        }
        if (use_oracle)
            std::cout << bq::oracle_count(d, X) << "\n";
        else
            std::cout << bq::count_colorings(d, X, bq::kDefaultSchema, jobs) << "\n";
        return 0;
    }
    if (invariant->parsed()) {
        const auto d = bq::parse_diagram(slurp(diagram_file));
        const auto X = bq::parse_matrix(slurp(algebra_file));
        const auto w = bq::parse_weight(slurp(weight_file));
        std::cout << bq::enhanced_invariant(d, X, w).polynomial() << "\n";
        return 0;
    }
    if (enumerate->parsed()) {
        int total = 0;
        bq::enumerate_biquasiles(order, [&](const bq::Biquasile& b) {
            std::cout << bq::serialize_matrix(b) << "\n";
            ++total;
        });
        std::cout << "total " << total << "\n";
        return 0;
    }
    if (resolve->parsed()) {
        const auto d = bq::parse_diagram(slurp(diagram_file));
        std::cout << bq::serialize_diagram(bq::resolve(d, sign == "+" ? 1 : -1));
        return 0;
    }
    if (cmp->parsed()) {
        const auto d1 = bq::parse_diagram(slurp(diagram_file));
        const auto d2 = bq::parse_diagram(slurp(diagram_file2));
        std::vector<std::pair<std::string, bq::BoltzmannWeight>> weights;
        if (!weight_file.empty())
            weights.emplace_back(stem(weight_file), bq::parse_weight(slurp(weight_file)));
        std::cout << bq::compare(d1, d2, alg.load(), weights).render();
        return 0;
    }
    if (table->parsed()) {
        std::vector<std::string> files;
        for (const auto& e : fs::directory_iterator(corpus_dir))
            if (e.path().extension() == ".mgd") files.push_back(e.path().string());
        std::sort(files.begin(), files.end());
        std::vector<bq::MarkedGraphDiagram> diagrams;
        for (const auto& f : files) {
            auto d = bq::parse_diagram(slurp(f));
            if (d.name.empty()) d.name = stem(f);
            diagrams.push_back(std::move(d));
        }
        const auto t = bq::invariant_table(diagrams, alg.load(), bq::kDefaultSchema, jobs);
        std::cout << t.render();
        return 0;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const bq::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const bq::budget_error& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const bq::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
