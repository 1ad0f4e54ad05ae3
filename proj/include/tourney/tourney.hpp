#pragma once

#include <tourney/alternative_set.hpp>
#include <tourney/banks.hpp>
#include <tourney/bench.hpp>
#include <tourney/cnf.hpp>
#include <tourney/error.hpp>
#include <tourney/generate.hpp>
#include <tourney/relation.hpp>
#include <tourney/sweep.hpp>
#include <tourney/teq.hpp>
#include <tourney/tournament.hpp>
#include <tourney/tournament_io.hpp>
#include <tourney/tstar.hpp>
#include <tourney/verify.hpp>
