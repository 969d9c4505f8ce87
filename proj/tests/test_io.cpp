#include <catch2/catch_amalgamated.hpp>

#include "curvop/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

using namespace curvop;

namespace {

double max_component_diff(const AlgCurvature& a, const AlgCurvature& b) {
    const int n = a.dim();
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    worst = std::max(worst, std::fabs(a.at(i, j, k, l) - b.at(i, j, k, l)));
    return worst;
}

} // namespace

TEST_CASE("tensor json round trip", "[io]") {
    const AlgCurvature R = random_einstein(5, 17.0, 41);
    const json j = tensor_to_json(R);
    CHECK(j.at("n").get<int>() == 5);
    const AlgCurvature back = tensor_from_json(j);
    CHECK(max_component_diff(R, back) <= 1e-14);
}

TEST_CASE("zero components are omitted from tensor json", "[io]") {
    const json j = tensor_to_json(flat_model(4));
    CHECK(j.at("entries").empty());
    const AlgCurvature back = tensor_from_json(j);
    CHECK(max_component_diff(back, flat_model(4)) == 0.0);
}

TEST_CASE("tensor json validation", "[io]") {
    json bad = {{"n", 4},
                {"entries", json::array({{{"i", 0}, {"j", 1}, {"k", 0}, {"l", 1}, {"v", 1.0}},
                                         {{"i", 0}, {"j", 1}, {"k", 0}, {"l", 1}, {"v", 2.0}}})}};
    CHECK_THROWS(tensor_from_json(bad));

    json out_of_range = {{"n", 4},
                         {"entries", json::array({{{"i", 0}, {"j", 4}, {"k", 0}, {"l", 1}, {"v", 1.0}}})}};
    CHECK_THROWS(tensor_from_json(out_of_range));

    // a single off-plane component cannot satisfy the cyclic identity
    json bent = {{"n", 4},
                 {"entries", json::array({{{"i", 0}, {"j", 1}, {"k", 2}, {"l", 3}, {"v", 1.0}}})}};
    CHECK_THROWS(tensor_from_json(bent));

    CHECK_THROWS(tensor_from_json(json{{"n", 1}, {"entries", json::array()}}));
}

TEST_CASE("spectrum json round trip", "[io]") {
    const Spectrum s = make_spectrum({-1, 0, 0, 0, 0, 1, 1, 1, 1});
    const json j = spectrum_to_json(s, 4, 4.0);
    CHECK(j.at("N").get<int>() == 9);

    const SpectrumFile f = spectrum_from_json(j);
    CHECK(f.n == 4);
    CHECK(std::fabs(f.scal - 4.0) <= 1e-15);
    for (int k = 0; k < 9; ++k)
        CHECK(f.spec.values[std::size_t(k)] == s.values[std::size_t(k)]);

    json defaulted = j;
    defaulted.erase("scal");
    CHECK(std::fabs(spectrum_from_json(defaulted).scal - 12.0 * s.mean) <= 1e-12);

    json wrong_count = j;
    wrong_count["eigenvalues"].push_back(2.0);
    CHECK_THROWS(spectrum_from_json(wrong_count));

    json wrong_mean = j;
    wrong_mean["mean"] = 0.75;
    CHECK_THROWS(spectrum_from_json(wrong_mean));
}

TEST_CASE("threshold table rows", "[io]") {
    const json high = threshold_to_json(6, 1.0);
    CHECK(high.at("regime").get<std::string>() == "high");
    CHECK(std::fabs(high.at("theta").get<double>() - 208.0 / 647.0) <= 1e-15);
    CHECK(std::fabs(high.at("alpha_max").get<double>() - 35.0 / 22.0) <= 1e-15);

    const json low = threshold_to_json(4, 2.7);
    CHECK(low.at("regime").get<std::string>() == "low");
    CHECK(std::fabs(low.at("theta").get<double>()) <= 1e-15);
    CHECK(low.at("N").get<int>() == 9);
}

TEST_CASE("model spec json round trip", "[io]") {
    ModelSpec ms;
    ms.kind = ModelKind::random_einstein;
    ms.n = 6;
    ms.scal = 30.0;
    ms.seed = 77;
    const ModelSpec back = model_spec_from_json(model_spec_to_json(ms));
    CHECK(back.kind == ModelKind::random_einstein);
    CHECK(back.n == 6);
    CHECK(back.scal == 30.0);
    CHECK(back.seed == 77);

    ModelSpec sp;
    sp.kind = ModelKind::sphere_product;
    sp.p = 2;
    sp.q = 3;
    sp.kappa1 = 2.0;
    sp.kappa2 = 1.0;
    const ModelSpec sp_back = model_spec_from_json(model_spec_to_json(sp));
    CHECK(sp_back.p == 2);
    CHECK(sp_back.q == 3);
    CHECK(sp_back.kappa1 == 2.0);

    CHECK_THROWS(model_spec_from_json(json{{"kind", "torus"}, {"params", json::object()}}));
}

TEST_CASE("profile json carries the ratio constants", "[io]") {
    const AlgCurvature W = weyl_decompose(random_einstein(4, 12.0, 2)).weyl;
    const ActionNormProfile p = action_norm_profile(W, Sym2Basis(4));
    const json j = profile_to_json(p);
    CHECK(j.at("norms").size() == 9);
    CHECK(std::fabs(j.at("sum_ratio").get<double>() - 6.0) <= 1e-12);
    CHECK(j.at("max_ratio").get<double>() <= 4.0 + 1e-12);
}

TEST_CASE("json files round trip through disk", "[io]") {
    const auto path =
        (std::filesystem::temp_directory_path() / "curvop_io_test.json").string();
    const AlgCurvature R = sphere_product(2, 1.0, 2, 1.0);
    write_json_file(path, tensor_to_json(R));
    const AlgCurvature back = tensor_from_json(read_json_file(path));
    CHECK(max_component_diff(R, back) <= 1e-14);
    std::remove(path.c_str());

    CHECK_THROWS(read_json_file("/nonexistent/curvop.json"));
}
