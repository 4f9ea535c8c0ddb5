import pytest
from httpx import ASGITransport, AsyncClient

from groupoid_card.server import app

C2 = [[0, 1], [1, 0]]
C3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
CYCLE = {"n": 3, "relations": [[[0, 1], [1, 2], [2, 0]]]}
TRANSITIVE = {"n": 3, "relations": [[[0, 1], [1, 2], [0, 2]]]}


def _over_c2(structure_map):
    return {
        "base": {"table": C2},
        "components": [{"group": {"table": C2}, "map": structure_map}],
    }


@pytest.fixture
async def client():
    transport = ASGITransport(app=app)
    async with AsyncClient(transport=transport, base_url="http://test") as client:
        yield client


async def test_health(client):
    response = await client.get("/health")
    assert response.status_code == 200
    assert response.json()["name"]


class TestGroupoidRoutes:
    async def test_skeletal_cardinality(self, client):
        response = await client.post(
            "/groupoids/cardinality", json={"components": [{"aut_order_table": C3}]}
        )
        assert response.status_code == 200
        assert response.json() == {
            "cardinality": "1/3",
            "classes": 1,
            "vertex_orders": [3],
        }

    async def test_explicit_cardinality(self, client):
        body = {
            "objects": ["a", "b"],
            "morphisms": [
                {"id": "1a", "src": "a", "dst": "a"},
                {"id": "1b", "src": "b", "dst": "b"},
                {"id": "f", "src": "a", "dst": "b"},
                {"id": "g", "src": "b", "dst": "a"},
            ],
            "compose": [
                ["1a", "1a", "1a"],
                ["1a", "f", "f"],
                ["f", "1b", "f"],
                ["f", "g", "1a"],
                ["1b", "1b", "1b"],
                ["1b", "g", "g"],
                ["g", "1a", "g"],
                ["g", "f", "1b"],
            ],
        }
        response = await client.post("/groupoids/cardinality", json=body)
        assert response.status_code == 200
        assert response.json()["cardinality"] == "1"

    async def test_functor_cardinality_with_brute_force(self, client):
        bc2 = {"components": [{"aut_order_table": C2}]}
        response = await client.post(
            "/groupoids/functor-cardinality",
            json={"source": bc2, "target": bc2, "brute": True},
        )
        assert response.status_code == 200
        assert response.json() == {
            "cardinality": "1",
            "brute_force": "1",
            "functors": 2,
        }

    async def test_factorize_identity(self, client):
        bc2 = {"components": [{"aut_order_table": C2}]}
        response = await client.post(
            "/groupoids/factorize",
            json={
                "source": bc2,
                "target": bc2,
                "object_map": [0],
                "morphism_map": [0, 1],
            },
        )
        assert response.status_code == 200
        data = response.json()
        assert [s["name"] for s in data["stages"]] == ["coimage", "middle", "image"]
        assert data["recomposes"] and data["is_equivalence"] and data["order_holds"]
        assert data["source_cardinality"] == data["target_cardinality"] == "1/2"

    async def test_form_must_be_chosen(self, client):
        response = await client.post("/groupoids/cardinality", json={})
        assert response.status_code == 422


class TestSeriesRoutes:
    async def test_gset_egf(self, client):
        response = await client.post(
            "/series/gset-egf", json={"group": {"table": C2}, "truncation": 4}
        )
        assert response.status_code == 200
        data = response.json()
        assert data["text"] == "1 + x + x^2 + 2/3 x^3 + 5/12 x^4"
        assert data["coeffs"] == ["1", "1", "1", "2/3", "5/12"]

    async def test_gset_cardinality(self, client):
        response = await client.post(
            "/series/gset-card", json={"components": [{"aut_order_table": C2}]}
        )
        assert response.status_code == 200
        assert response.json()["exponent"] == "3/2"

    async def test_gl_order(self, client):
        response = await client.post("/series/gl-order", json={"n": 3, "field_size": 2})
        assert response.status_code == 200
        assert response.json()["order"] == 168

    async def test_gl_order_needs_prime_power(self, client):
        response = await client.post("/series/gl-order", json={"n": 2, "field_size": 6})
        assert response.status_code == 422
        body = response.json()
        assert body["error"]
        assert "message" in body["details"]

    async def test_rep_series(self, client):
        response = await client.post(
            "/series/rep-series",
            json={"components": [{"dim_v": 1, "q": 2, "d": 1}], "truncation": 3},
        )
        assert response.status_code == 200
        assert response.json()["coeffs"] == ["1", "1", "1/6", "1/168"]

    async def test_tameness(self, client):
        response = await client.post(
            "/series/tameness",
            json={"component": {"dim_v": 1, "q": 2, "d": 1}, "truncation": 3},
        )
        assert response.status_code == 200
        assert response.json() == {
            "partial_sum": "365/168",
            "borel_bound": "21/8",
            "holds": True,
        }


class TestRelFinRoutes:
    async def test_hom_with_decomposition(self, client):
        response = await client.post(
            "/relfin/hom",
            json={"source": _over_c2([0, 0]), "target": _over_c2([0, 1])},
        )
        assert response.status_code == 200
        data = response.json()
        assert data["hom_cardinality"] == "1"
        assert data["faithful_cardinality"] == "0"
        assert data["decomposition_holds"] is True

    async def test_hom_from_two_components(self, client):
        source = _over_c2([0, 0])
        source["components"].append({"group": {"table": [[0]]}, "map": [0]})
        target = _over_c2([0, 1])
        target["components"].append({"group": {"table": C2}, "map": [0, 0]})
        response = await client.post(
            "/relfin/hom", json={"source": source, "target": target}
        )
        assert response.status_code == 200
        data = response.json()
        assert data["hom_cardinality"] == "6"
        assert data["decomposition_lhs"] == data["decomposition_rhs"] == "6"
        assert data["decomposition_holds"] is True

    async def test_equivalence(self, client):
        response = await client.post(
            "/relfin/equivalence",
            json={"first": _over_c2([0, 1]), "second": _over_c2([0, 0])},
        )
        assert response.status_code == 200
        assert response.json() == {"equivalent": False, "matching": []}

    async def test_distinguish(self, client):
        response = await client.post(
            "/relfin/distinguish",
            json={"first": _over_c2([0, 1]), "second": _over_c2([0, 0])},
        )
        assert response.status_code == 200
        data = response.json()
        assert data["found"] is True
        assert (data["lhs"], data["rhs"]) == ("1", "2")
        assert data["witness"]["components"][0]["map"] == [0, 0]

    async def test_bad_structure_map(self, client):
        response = await client.post(
            "/relfin/equivalence",
            json={"first": _over_c2([1, 0]), "second": _over_c2([0, 0])},
        )
        assert response.status_code == 422
        assert response.json()["error"]


class TestStructureRoutes:
    async def test_homcount(self, client):
        edge = {"n": 2, "relations": [[[0, 1]]]}
        response = await client.post(
            "/structures/homcount", json={"source": edge, "target": CYCLE}
        )
        assert response.status_code == 200
        assert response.json() == {"count": 3, "injective": False}

    async def test_lovasz_distinguishes(self, client):
        response = await client.post(
            "/structures/lovasz",
            json={"first": CYCLE, "second": TRANSITIVE, "bound": 3},
        )
        assert response.status_code == 200
        data = response.json()
        assert data["distinguished"] is True
        assert data["isomorphic"] is False
        assert data["hom_a"] != data["hom_b"]

    async def test_lovasz_bound_too_small(self, client):
        response = await client.post(
            "/structures/lovasz",
            json={"first": CYCLE, "second": TRANSITIVE, "bound": 2},
        )
        assert response.status_code == 422
        assert response.json()["details"]["bound"] == 2

    async def test_out_of_range_tuple(self, client):
        broken = {"n": 2, "relations": [[[0, 5]]]}
        response = await client.post(
            "/structures/homcount", json={"source": broken, "target": CYCLE}
        )
        assert response.status_code == 422


async def test_space_cardinality(client):
    response = await client.post("/spaces/cardinality", json={"components": [[2, 3]]})
    assert response.status_code == 200
    assert response.json() == {"cardinality": "3/2", "components": 1}
