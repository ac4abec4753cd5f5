#include <string>

#include "doctest.h"
#include "solmin/suites.hpp"

using namespace solmin;

TEST_CASE("helicoid residual suite") {
  const VerificationReport rep = verify_helicoid(0.4);
  CHECK(rep.all_pass());
  CHECK(rep.checks().size() == 48);
  // Serialized text is sorted and verdict-stamped.
  const std::string text = rep.to_text();
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("catenoid residual suite") {
  const VerificationReport rep = verify_catenoid(0.6);
  CHECK(rep.all_pass());
  CHECK(rep.checks().size() == 62);
}

TEST_CASE("negated parameters pass the same suites") {
  CHECK(verify_helicoid(-0.7).all_pass());
  CHECK(verify_catenoid(-0.3).all_pass());
}

TEST_CASE("graph residual suite") {
  const VerificationReport rep = verify_graph_surface();
  CHECK(rep.all_pass());
  CHECK(rep.checks().size() == 19);
}

TEST_CASE("plane-limit residual suite") {
  const VerificationReport rep = verify_plane_limit();
  CHECK(rep.all_pass());
  CHECK(rep.checks().size() == 8);
}

TEST_CASE("impossible tolerances are reported as failures") {
  const VerificationReport rep = verify_helicoid(0.4, 1e-30);
  CHECK(!rep.all_pass());
  CHECK(rep.failure_count() > 0);
}
