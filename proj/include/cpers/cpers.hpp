#ifndef CPERS_CPERS_HPP
#define CPERS_CPERS_HPP

#include "assoc_primes.hpp"
#include "coloring.hpp"
#include "cover_ideal.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "hq_verification.hpp"
#include "io.hpp"
#include "monomial.hpp"
#include "monomial_ideal.hpp"
#include "parallel.hpp"
#include "report_json.hpp"
#include "vertex_covers.hpp"
#include "vertex_set.hpp"
#include "witness_search.hpp"

#endif
