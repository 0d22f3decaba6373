import pytest

import txsecrecy as tx

EAVE_DB_K3 = (6.0, 9.0, 13.0)
EAVE_DB_K1 = (13.0,)


def make_scenario(n=5, k=3, s=0.9, dest_db=20.0, rth=1.0):
    eave = EAVE_DB_K3[:k] if k <= 3 else tuple(6.0 + 2.0 * i for i in range(k))
    return tx.scenario_from_db(n, k, s, dest_db, eave, threshold_rate=rth)


@pytest.fixture(scope="session")
def base_scenario():
    return make_scenario()
