import numpy as np
import pytest
from sklearn.base import clone

from hmrnet.estimators import APCommunities, MPCommunities
from hmrnet.graph import build_layer
from hmrnet.metrics import nmi
from hmrnet.synthgen import generate_synthetic_II


def two_blocks_adjacency():
    layer = build_layer(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)])
    return layer.adjacency_matrix()


class TestAPCommunities:
    def test_get_params_round_trip(self):
        est = APCommunities(damping=0.7, preference=-2.0)
        params = est.get_params()
        assert params["damping"] == 0.7
        assert params["preference"] == -2.0
        est2 = APCommunities(**params)
        assert est2.get_params() == params

    def test_clone(self):
        est = APCommunities(damping=0.8)
        assert clone(est).get_params() == est.get_params()

    def test_fit_two_blocks(self):
        est = APCommunities().fit(two_blocks_adjacency())
        assert est.n_communities_ == 2
        assert est.labels_[0] == est.labels_[1] == est.labels_[2]
        assert est.labels_[3] == est.labels_[4] == est.labels_[5]
        assert est.labels_[0] != est.labels_[3]

    def test_fit_predict(self):
        labels = APCommunities().fit_predict(two_blocks_adjacency())
        assert len(labels) == 6

    def test_accepts_layer_object(self):
        layer = build_layer(4, [(0, 1), (2, 3)])
        est = APCommunities().fit(layer)
        assert len(est.labels_) == 4

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            APCommunities().fit(np.zeros((2, 3)))


class TestMPCommunities:
    def test_requires_network_object(self):
        with pytest.raises(ValueError):
            MPCommunities().fit(np.zeros((4, 4)))

    def test_fit_exposes_both_layers(self):
        net, tx, ty, _ = generate_synthetic_II(3, 0.9, 0.1, 0, nodes_per_layer=24)
        est = MPCommunities(m_penalty=1.3).fit(net)
        assert len(est.labels_x_) == 24
        assert len(est.labels_y_) == 24
        assert len(est.labels_) == 48
        assert est.n_bicliques_ >= 0
        assert est.diagnostics_.iterations_run >= 1
        # concatenated ids never collide across layers
        assert set(est.labels_[:24]).isdisjoint(set(est.labels_[24:]))
        # detected structure carries signal about the planted one
        assert nmi(est.labels_x_, tx) > 0.3

    def test_get_params_and_clone(self):
        est = MPCommunities(m_penalty=0.5, min_x=1)
        params = est.get_params()
        assert params["m_penalty"] == 0.5
        assert params["min_x"] == 1
        assert clone(est).get_params() == params
