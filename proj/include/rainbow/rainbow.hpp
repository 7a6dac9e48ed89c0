#pragma once

#include "rainbow/bounds.hpp"
#include "rainbow/chromatic.hpp"
#include "rainbow/gen_io.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/harness.hpp"
#include "rainbow/lemma1.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/report.hpp"
#include "rainbow/theorem2.hpp"
#include "rainbow/vertex_set.hpp"
