import { defineConfig } from 'vitest/config';

export default defineConfig({
  test: {
    environment: 'node',
    include: ['tests/**/*.test.ts'],
    // The integration suite boots the real Python server in beforeAll.
    testTimeout: 30_000,
    hookTimeout: 60_000,
  },
});
