#include <doctest.h>

#include <stdexcept>

#include "scc/job.hpp"

using scc::BitString;
using scc::JobSpec;

namespace {

JobSpec small_job() {
  JobSpec job;
  job.num_nodes = 3;
  job.num_files = 4;
  job.file_bits = 64;
  job.iva_bits = 16;
  job.output_bits = 32;
  job.seed = 1;
  return job;
}

}  // namespace

TEST_CASE("file generation is deterministic in the spec") {
  JobSpec job = small_job();
  job.num_files = 1;
  job.file_bits = 8;
  job.seed = 0;
  auto once = scc::generate_files(job);
  auto twice = scc::generate_files(job);
  REQUIRE(once.size() == 1);
  CHECK(once[0].size() == 8);
  CHECK(once == twice);

  job.num_files = 12;
  job.file_bits = 32;
  CHECK(scc::generate_files(job) == scc::generate_files(job));
}

TEST_CASE("distinct seeds give distinct corpora") {
  JobSpec a = small_job();
  a.file_bits = 64;
  a.seed = 1;
  JobSpec b = a;
  b.seed = 2;
  CHECK(scc::generate_files(a) != scc::generate_files(b));
}

TEST_CASE("map function contract") {
  JobSpec job = small_job();
  auto files = scc::generate_files(job);

  auto v = scc::map_iva(job, 0, 0, files[0]);
  CHECK(v.size() == 16);
  CHECK(v == scc::map_iva(job, 0, 0, files[0]));
  // Different targets on the same file give different values.
  CHECK(v != scc::map_iva(job, 1, 0, files[0]));
  // Content matters, not just indices.
  BitString tampered = files[0];
  tampered.flip_bit(5);
  CHECK(v != scc::map_iva(job, 0, 0, tampered));

  BitString short_file(8);
  CHECK_THROWS_AS(scc::map_iva(job, 0, 0, short_file), std::invalid_argument);
  CHECK_THROWS_AS(scc::map_iva(job, 3, 0, files[0]), std::invalid_argument);
}

TEST_CASE("reduce function contract") {
  JobSpec job = small_job();
  auto files = scc::generate_files(job);
  auto ivas = scc::all_ivas(job, files);

  auto out = scc::reduce_output(job, 0, ivas[0]);
  CHECK(out.size() == 32);
  CHECK(out == scc::reduce_output(job, 0, ivas[0]));

  // A single flipped bit in the third value changes the digest.
  auto corrupted = ivas[0];
  corrupted[2].flip_bit(0);
  CHECK(out != scc::reduce_output(job, 0, corrupted));

  auto wrong_count = ivas[0];
  wrong_count.pop_back();
  CHECK_THROWS_AS(scc::reduce_output(job, 0, wrong_count), std::invalid_argument);

  auto wrong_length = ivas[0];
  wrong_length[1] = BitString(8);
  CHECK_THROWS_AS(scc::reduce_output(job, 0, wrong_length), std::invalid_argument);
}

TEST_CASE("degenerate single-file reduce") {
  JobSpec job = small_job();
  job.num_files = 1;
  auto files = scc::generate_files(job);
  auto ivas = scc::all_ivas(job, files);
  REQUIRE(ivas[0].size() == 1);
  CHECK(scc::reduce_output(job, 0, ivas[0]).size() == 32);
}

TEST_CASE("whole pipeline is a pure function of the spec") {
  JobSpec job = small_job();
  auto files = scc::generate_files(job);
  CHECK(scc::oracle_outputs(job, files) == scc::oracle_outputs(job, files));
}

TEST_CASE("spec validation") {
  JobSpec job = small_job();
  job.num_nodes = 1;
  CHECK_THROWS_AS(job.validate(), std::invalid_argument);
  job = small_job();
  job.iva_bits = 0;
  CHECK_THROWS_AS(job.validate(), std::invalid_argument);
}
