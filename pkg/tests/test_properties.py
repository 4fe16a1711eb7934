"""Quick-turnaround property checks; the acceptance suite reruns them at volume."""

from propchecks import (
    check_parser_totality,
    check_round_trip,
    check_rule_monotonicity,
    check_table_monotonicity,
)


def test_tables_are_monotone():
    check_table_monotonicity()


def test_rule_monotonicity_sample():
    check_rule_monotonicity(seed=101, count=300)


def test_round_trip_sample():
    check_round_trip(seed=202, count=200)


def test_parser_totality_sample():
    check_parser_totality(seed=303, count=3000)
