#include <doctest.h>

#include "mhforge/ids.hpp"
#include "mhforge/jobs.hpp"

using namespace mhf;

namespace {

JobSpec job(std::string command, std::string target, std::map<std::string, std::string> inputs,
            std::string variant = "", bool trust = false) {
    JobSpec j;
    j.command = std::move(command);
    j.target = std::move(target);
    j.inputs = std::move(inputs);
    j.variant = std::move(variant);
    j.trust_input = trust;
    return j;
}

// translation pack of S3 whose left action sends s▷δ_e to δ_e instead of δ_{s⁻¹}
std::string corrupted_translation() {
    Group s3 = Group::symmetric(3);
    ActionPack p = translation_pack(s3);
    const Index n = s3.size();
    Index s = s3.identity() == 0 ? 1 : 0;
    std::vector<SparseVec> cols;
    for (Index i = 0; i < n * n; ++i) cols.push_back(p.left_action->column(i));
    cols[s * n + s3.identity()] = SparseVec::unit(s3.identity());
    p.left_action = LinearMap::from_columns(p.left_action->src(), p.left_action->tgt(), cols);
    return pack_json(p).dump();
}

const Condition* failing_with_witness(const Report& r) {
    for (const auto& c : r.verdict.conditions())
        if (!c.pass && c.witness) return &c;
    return nullptr;
}

}  // namespace

TEST_SUITE("jobs") {
    TEST_CASE("check hopf kS3 is all pass") {
        auto res = run_job(job("check", "hopf", {{"in", "kS3"}}));
        CHECK(res.exit_code == 0);
        REQUIRE(res.reports.size() == 1);
        CHECK(res.reports[0].verdict.pass());
        CHECK(res.reports[0].dims.at("dim") == 6);
        CHECK(res.reports[0].verdict.conditions().size() > 5);
    }

    TEST_CASE("build twisted-right smash of fS3 and kS3: 36-dim artifact that is a valid input") {
        auto res = run_job(job("build", "smash", {{"A", "fS3"}, {"B", "kS3"}}, "twisted-right"));
        CHECK(res.exit_code == 0);
        REQUIRE(res.artifact);
        CHECK((*res.artifact)["basis"].size() == 36);
        CHECK(res.reports[0].dims.at("product") == 36);
        CHECK(res.reports[0].verdict.find(ids::twisted_smash_assoc));
        // closure: the artifact feeds back into check algebra
        auto again = run_job(job("check", "algebra", {{"in", res.artifact->dump()}}));
        CHECK(again.exit_code == 0);
        // same construction through the twisted-smash command
        auto alt = run_job(job("build", "twisted-smash", {{"A", "fS3"}, {"B", "kS3"}}, "right"));
        CHECK(alt.artifact->dump() == res.artifact->dump());
    }

    TEST_CASE("⋆/◇ transport on a corrupted translation pack exits 1 with a witness") {
        const std::string bad = corrupted_translation();
        auto refused = run_job(job("verify-iso", ids::lr_vs_twisted_iso, {{"A", bad}, {"B", "kS3"}}));
        CHECK(refused.exit_code == 1);
        REQUIRE(refused.reports.size() == 1);
        CHECK(failing_with_witness(refused.reports[0]));

        auto trusted = run_job(job("verify-iso", ids::lr_vs_twisted_iso, {{"A", bad}, {"B", "kS3"}}, "right", true));
        CHECK(trusted.exit_code == 1);
        REQUIRE(trusted.reports.size() == 1);
        const Condition* c = failing_with_witness(trusted.reports[0]);
        REQUIRE(c);
        CHECK(c->witness->tuple.size() >= 2);

        auto good = run_job(job("verify-iso", ids::lr_vs_twisted_iso, {{"A", "fS3"}, {"B", "kS3"}}, "left"));
        CHECK(good.exit_code == 0);
    }

    TEST_CASE("input errors exit 2") {
        CHECK(run_job(job("check", "hopf", {{"in", "kX9"}})).exit_code == 2);
        CHECK(run_job(job("check", "hopf", {{"in", "{\"basis\": ["}})).exit_code == 2);
        CHECK(run_job(job("check", "hopf", {})).exit_code == 2);
        CHECK(run_job(job("build", "smash", {{"A", "fS3"}, {"B", "kS3"}}, "sideways")).exit_code == 2);
        CHECK(run_job(job("verify-iso", "no-such-kind", {})).exit_code == 2);
        auto res = run_job(job("frobnicate", "", {}));
        CHECK(res.exit_code == 2);
        CHECK(res.error.find("frobnicate") != std::string::npos);
    }

    TEST_CASE("check twist from inline maps") {
        // R = τ on kC2⊗kC2 and T = id, as flattened [src, tgt, c] entries
        const std::string r = "[[0,0,1],[1,2,1],[2,1,1],[3,3,1]]";
        const std::string t = "[[0,0,1],[1,1,1],[2,2,1],[3,3,1]]";
        auto res = run_job(job("check", "twist", {{"A", "kC2"}, {"B", "kC2"}, {"R", r}, {"T", t}}));
        CHECK(res.exit_code == 0);
        CHECK(res.reports[0].dims.at("product") == 4);
        // T = 2·id breaks the unit conditions
        const std::string t2 = "[[0,0,2],[1,1,2],[2,2,2],[3,3,2]]";
        auto bad = run_job(job("check", "twist", {{"A", "kC2"}, {"B", "kC2"}, {"R", r}, {"T", t2}}));
        CHECK(bad.exit_code == 1);
        CHECK(run_job(job("check", "twist", {{"in", "translation:S3"}})).exit_code == 0);
    }

    TEST_CASE("other builds and isomorphisms") {
        CHECK(run_job(job("build", "double", {{"group", "C2"}})).exit_code == 0);
        CHECK(run_job(job("build", "long-product", {{"in", "composite:S3"}}, "enveloping")).exit_code == 0);
        CHECK(run_job(job("build", "twisted", {{"in", "adjoint-smash:S3"}, {"A", "fS3"}, {"B", "kS3"}}, "hopf")).exit_code == 0);
        CHECK(run_job(job("build", "twisted", {{"in", "reflection"}, {"A", "KZ"}, {"B", "kC2"}}, "multiplier-hopf")).exit_code == 0);
        CHECK(run_job(job("verify-iso", ids::long_alpha, {{"in", "composite:S3"}})).exit_code == 0);
        CHECK(run_job(job("verify-iso", ids::smash_duality_iso, {{"group", "S3"}})).exit_code == 0);
        Hopf k4 = hopf_by_name("kC2xC2");
        const std::string inv = "involution:" + k4.space().label(2) + "," + k4.space().label(1);
        auto ti = run_job(job("verify-iso", ids::twist_invariance,
                              {{"A", "translation:C2xC2"}, {"B", "regular:C2xC2"}, {"R", inv}}));
        CHECK_MESSAGE(ti.exit_code == 0, ti.error);
        REQUIRE(ti.reports.size() == 1);
        CHECK(ti.reports[0].verdict.find(ids::drinfeld_cocycle));
    }

    TEST_CASE("window flag selects the K(Z) window") {
        JobSpec j = job("check", "hopf", {{"in", "KZ"}});
        j.window = 3;
        auto res = run_job(j);
        CHECK(res.exit_code == 0);
        CHECK(res.reports[0].dims.at("dim") == windowed_kz(3).dim());
    }

    TEST_CASE("reports are deterministic") {
        auto a = run_job(job("build", "smash", {{"A", "fS3"}, {"B", "kS3"}}, "lr-left"));
        auto b = run_job(job("build", "smash", {{"A", "fS3"}, {"B", "kS3"}}, "lr-left"));
        CHECK(a.reports[0].canonical_json().dump() == b.reports[0].canonical_json().dump());
        CHECK(a.artifact->dump() == b.artifact->dump());
        CHECK_FALSE(a.reports[0].canonical_json().contains("timing"));
        CHECK(a.reports[0].full_json().contains("timing"));
    }

    TEST_CASE("criterion jobs run through report") {
        JobSpec j = job("report", "", {});
        j.criteria = {3, 7};
        auto res = run_job(j);
        CHECK(res.exit_code == 0);
        CHECK(res.reports.size() == 2);
        j.criteria = {12};
        CHECK(run_job(j).exit_code == 2);
    }
}
