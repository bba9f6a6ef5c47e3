"""Shared immutable values under concurrent use."""

from concurrent.futures import ThreadPoolExecutor

from reflextor.homology import depth, resolution, tor


class TestConcurrentUse:
    def test_parallel_depth_computations_share_caches(self, ring_a, m_a, n_a,
                                                      tensor_a):
        jobs = [
            lambda: depth(m_a),
            lambda: depth(n_a),
            lambda: depth(tensor_a),
            lambda: ring_a.depth(),
            lambda: depth(m_a),
        ]
        with ThreadPoolExecutor(max_workers=5) as pool:
            results = [f.result() for f in [pool.submit(j) for j in jobs]]
        assert results == [2, 3, 2, 3, 2]

    def test_concurrent_resolution_extension_serializes(self, n_a):
        res = resolution(n_a)

        def extend(k):
            res.extend_to(k)
            return res.length_computed()

        with ThreadPoolExecutor(max_workers=4) as pool:
            list(pool.submit(extend, k) for k in (3, 5, 4, 6))
        assert res.length_computed() >= 6
        assert res.check_d_squared()
        assert res.is_minimal()

    def test_parallel_tor_table(self, m_a, n_a, tensor_a):
        pairs = [(m_a, n_a, 1), (n_a, m_a, 1), (m_a, tensor_a, 2),
                 (n_a, n_a, 2)]
        with ThreadPoolExecutor(max_workers=4) as pool:
            futures = [
                pool.submit(lambda p: tor(p[0], p[1], p[2],
                                          want_module=False).is_zero, p)
                for p in pairs
            ]
            flags = [f.result() for f in futures]
        assert flags[0] == flags[1] == True
