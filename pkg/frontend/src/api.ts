import type {
  InspectResponse,
  PresentResponse,
  RewardResponse,
  Reward,
  SessionConfig,
} from './types';

export class ServiceError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(`${base}${path}`, {
    headers: { 'Content-Type': 'application/json' },
    ...init,
  });
  if (!response.ok) {
    let code = 'http_error';
    let message = response.statusText;
    try {
      const body = (await response.json()) as { code?: string; message?: string };
      if (body.code) code = body.code;
      if (body.message) message = body.message;
    } catch {
      /* non-JSON error body */
    }
    throw new ServiceError(code, message, response.status);
  }
  return (await response.json()) as T;
}

export class TeachingClient {
  constructor(readonly base: string = '') {}

  async createSession(config: SessionConfig): Promise<string> {
    const body = await request<{ sessionId: string }>(this.base, '/sessions', {
      method: 'POST',
      body: JSON.stringify(config),
    });
    return body.sessionId;
  }

  present(sessionId: string, features: Record<string, number[]>): Promise<PresentResponse> {
    return request(this.base, `/sessions/${sessionId}/present`, {
      method: 'POST',
      body: JSON.stringify({ features }),
    });
  }

  reward(sessionId: string, reward: Reward): Promise<RewardResponse> {
    return request(this.base, `/sessions/${sessionId}/reward`, {
      method: 'POST',
      body: JSON.stringify({ reward }),
    });
  }

  inspect(sessionId: string): Promise<InspectResponse> {
    return request(this.base, `/sessions/${sessionId}`);
  }

  async events(sessionId: string, since: number): Promise<string[]> {
    const response = await fetch(`${this.base}/sessions/${sessionId}/events?since=${since}`);
    if (!response.ok) throw new ServiceError('http_error', response.statusText, response.status);
    const text = await response.text();
    return text.split('\n').filter((line) => line.length > 0);
  }
}
