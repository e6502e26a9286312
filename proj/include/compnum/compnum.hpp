#pragma once

#include <compnum/bounds.hpp>
#include <compnum/cliques.hpp>
#include <compnum/constructions.hpp>
#include <compnum/dag_oracle.hpp>
#include <compnum/ecc.hpp>
#include <compnum/enumerate.hpp>
#include <compnum/graph.hpp>
#include <compnum/io.hpp>
#include <compnum/matching.hpp>
#include <compnum/realizer.hpp>
#include <compnum/report.hpp>
#include <compnum/sweep.hpp>
